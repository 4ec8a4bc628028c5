#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybe/chain.hpp"
#include "ybe/entanglement.hpp"
#include "ybe/format.hpp"
#include "ybe/hamiltonian.hpp"
#include "ybe/rmatrix.hpp"
#include "ybe/threebody.hpp"
#include "ybe/transfer.hpp"

namespace ybe::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = 20240917;
  bool json = false;
};

// Angle given directly or through its cosine and/or sine.
struct AngleInput {
  std::optional<double> value;
  std::optional<double> cos;
  std::optional<double> sin;

  double resolve(const char* name, double fallback) const {
    constexpr double kConsistency = 1e-9;
    std::optional<double> from_trig;
    if (cos && sin) {
      if (std::abs(*cos * *cos + *sin * *sin - 1.0) > kConsistency) {
        throw InputError(std::string(name) + ": cosine and sine are inconsistent");
      }
      from_trig = std::atan2(*sin, *cos);
    } else if (cos) {
      if (std::abs(*cos) > 1.0) throw InputError(std::string(name) + ": cosine outside [-1, 1]");
      from_trig = std::acos(*cos);
    } else if (sin) {
      if (std::abs(*sin) > 1.0) throw InputError(std::string(name) + ": sine outside [-1, 1]");
      from_trig = std::asin(*sin);
    }
    if (value && from_trig) {
      if ((cos && std::abs(std::cos(*value) - *cos) > kConsistency) ||
          (sin && std::abs(std::sin(*value) - *sin) > kConsistency)) {
        throw InputError(std::string(name) + ": angle and its cosine/sine disagree");
      }
    }
    if (value) return *value;
    if (from_trig) return *from_trig;
    return fallback;
  }
};

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out_path, "Write the CSV artifact to this path");
  app->add_option("--tol", c.tol, "Tolerance override");
  app->add_option("--seed", c.seed, "Seed for random-sample suites");
  app->add_flag("--json", c.json, "Print the summary as JSON");
}

void add_angle(CLI::App* app, const std::string& name, AngleInput& a) {
  app->add_option("--" + name, a.value, name + " in radians");
  app->add_option("--" + name + "-cos", a.cos, "cosine of " + name);
  app->add_option("--" + name + "-sin", a.sin, "sine of " + name);
}

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("parameters must be finite");
  }
}

// CSV goes to --out when given, otherwise to stdout unless JSON was requested.
void emit_csv(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw InputError("cannot open output file " + c.out_path);
    write(f);
  } else if (!c.json) {
    write(out);
  }
}

json triple_json(const ConcurrenceTriple& t) {
  return {{"c1_23_sq", t.c1_23_sq}, {"c2_13_sq", t.c2_13_sq}, {"c3_12_sq", t.c3_12_sq}};
}

std::string triple_text(const ConcurrenceTriple& t) {
  return fmt12(t.c1_23_sq) + " " + fmt12(t.c2_13_sq) + " " + fmt12(t.c3_12_sq);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// verify

struct VerifyOptions {
  std::string suite = "all";
  int samples = 100;
  std::vector<double> etas;
  int beta_grid = 200;
  int steps = 10000;
};

double limit_or(const Common& c, double fallback) { return c.tol ? *c.tol : fallback; }

void suite_ybe(const VerifyOptions& v, const Common& c, std::mt19937_64& rng, std::vector<Check>& out) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  double worst = 0.0;
  for (int i = 0; i < v.samples; ++i) {
    const double t1 = ang(rng), t3 = ang(rng), chi = ang(rng);
    const LorentzSum s = lorentz_add(t1, t3);
    if (s.pole) continue;
    worst = std::max(worst, ybe_residual(t1, s.theta2, t3, chi).lhs_rhs_norm);
  }
  const double lim = limit_or(c, 1e-12);
  out.push_back({"ybe", "max_residual", worst, lim, worst <= lim});
  double braid = 0.0;
  for (int i = 0; i < v.samples; ++i) braid = std::max(braid, braid_relation_residual(braid_b(ang(rng))));
  out.push_back({"ybe", "braid_relation", braid, lim, braid <= lim});
}

void suite_chart(const VerifyOptions& v, const Common& c, std::mt19937_64& rng, std::vector<Check>& out) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  double forms = 0.0, conc = 0.0;
  for (int i = 0; i < v.samples; ++i) {
    const ThreeBodyAngles a{ang(rng), ang(rng), ang(rng)};
    if (lorentz_add(a.theta1, a.theta3).pole) continue;
    const EtaBeta eb = eta_beta_from(a);
    forms = std::max(forms, (r123_exponential(eb) - r123_factorized(a)).norm());
    const ConcurrenceTriple closed = concurrence_closed(eb);
    for (const auto& s : generate_states(eb)) conc = std::max(conc, concurrence3(s).max_abs_diff(closed));
  }
  const double lim = limit_or(c, 1e-12);
  out.push_back({"chart", "exponential_vs_factorized", forms, lim, forms <= lim});
  const double lim_c = limit_or(c, 1e-10);
  out.push_back({"chart", "concurrence_closed_form", conc, lim_c, conc <= lim_c});
}

void suite_spectrum(const VerifyOptions& v, const Common& c, std::mt19937_64& rng,
                    std::vector<Check>& out) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  double level = 0.0, proj = 0.0;
  int skipped = 0;
  for (int i = 0; i < v.samples; ++i) {
    const double eta = ang(rng), beta = ang(rng), phi = ang(rng);
    const SpectrumReport r = eigenbasis3({eta, beta}, phi);
    level = std::max(level, r.max_level_error);
    if (r.degenerate || std::isnan(r.projector_distance[0])) {
      ++skipped;
      continue;
    }
    for (double d : r.projector_distance) proj = std::max(proj, d);
  }
  const double lim_l = limit_or(c, 1e-10), lim_p = limit_or(c, 1e-9);
  out.push_back({"spectrum", "level_error", level, lim_l, level <= lim_l});
  out.push_back({"spectrum", "projector_distance", proj, lim_p, proj <= lim_p && skipped < v.samples});
}

void suite_berry(const VerifyOptions& v, const Common& c, std::vector<Check>& out) {
  const std::vector<double> etas =
      v.etas.empty() ? std::vector<double>{M_PI / 6, -M_PI / 6, M_PI / 3, -M_PI / 3, 0.2, 1.0} : v.etas;
  const double lim = limit_or(c, 1e-6);
  for (double eta : etas) {
    for (Band band : {Band::Plus, Band::Minus}) {
      const double sign = band == Band::Plus ? -1.0 : 1.0;
      const double expected = -M_PI * (1.0 + sign * std::sin(eta));
      double worst = 0.0;
      for (double beta : {0.3, 1.1, -0.7}) {
        worst = std::max(worst, std::abs(berry_phase({eta, beta}, band, v.steps) - expected));
      }
      out.push_back({"berry", std::string(band == Band::Plus ? "plus" : "minus") + "_eta=" + fmt12(eta),
                     worst, lim, worst <= lim});
    }
  }
}

void suite_jw(const VerifyOptions& v, const Common& c, std::mt19937_64& rng, std::vector<Check>& out) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  const double lim = limit_or(c, 1e-10);
  for (int n : {4, 6, 8}) {
    double worst = 0.0;
    const int reps = std::max(1, v.samples / 10);
    for (int i = 0; i < reps; ++i) {
      for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
        const ChainSpec s{n, ang(rng), ang(rng), ang(rng), b};
        const RealVector spin = herm_eig(one_magnon_block(spin_chain_matrix(s), n)).eigenvalues;
        const RealVector ferm = herm_eig(one_particle_block(fermion_quadratic(s))).eigenvalues;
        worst = std::max(worst, (spin - ferm).cwiseAbs().maxCoeff());
      }
    }
    out.push_back({"jw", "one_magnon_n=" + std::to_string(n), worst, lim, worst <= lim});
  }
}

void suite_zeromode(const VerifyOptions& v, std::vector<Check>& out) {
  if (v.beta_grid < 1) throw InputError("--beta-grid must be positive");
  int unpaired = 0, wrong_count = 0;
  for (int i = 0; i < v.beta_grid; ++i) {
    const double beta = (i + 0.5) * (M_PI / 2) / v.beta_grid;
    const ZeroModeReport r = boundary_nullspace(beta, zero_mode_cubic(beta));
    unpaired += r.unpaired_mf;
    int inside = 0;
    for (double m : r.moduli) inside += m <= 1.0 + 1e-8;
    wrong_count += inside != 2;
  }
  out.push_back({"zeromode", "unpaired_mf_count", double(unpaired), 0.0, unpaired == 0});
  out.push_back({"zeromode", "inside_root_count_violations", double(wrong_count), 0.0, wrong_count == 0});
}

int cmd_verify(const VerifyOptions& v, const Common& c, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"ybe", "chart", "spectrum", "berry", "jw", "zeromode"};
  if (v.suite != "all" && std::find(kSuites.begin(), kSuites.end(), v.suite) == kSuites.end()) {
    throw InputError("unknown suite " + v.suite);
  }
  if (v.samples < 1) throw InputError("--samples must be positive");
  for (double e : v.etas) require_finite({e});

  std::mt19937_64 rng(c.seed);
  std::vector<Check> checks;
  auto want = [&](const std::string& s) { return v.suite == "all" || v.suite == s; };
  if (want("ybe")) suite_ybe(v, c, rng, checks);
  if (want("chart")) suite_chart(v, c, rng, checks);
  if (want("spectrum")) suite_spectrum(v, c, rng, checks);
  if (want("berry")) suite_berry(v, c, checks);
  if (want("jw")) suite_jw(v, c, rng, checks);
  if (want("zeromode")) suite_zeromode(v, checks);

  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
  if (c.json) {
    json arr = json::array();
    for (const auto& k : checks) {
      arr.push_back({{"suite", k.suite}, {"check", k.name}, {"value", k.value}, {"limit", k.limit},
                     {"pass", k.pass}});
    }
    print_json(out, {{"checks", arr}, {"pass", all_pass}});
  } else {
    for (const auto& k : checks) {
      out << (k.pass ? "PASS " : "FAIL ") << k.suite << ' ' << k.name << " value=" << fmt12(k.value)
          << " limit=" << fmt12(k.limit) << '\n';
    }
    out << (all_pass ? "all checks passed" : "some checks failed") << '\n';
  }
  return all_pass ? kExitOk : kExitFailed;
}

// states / concurrence

struct PointOptions {
  AngleInput eta, beta;
  double phi = 0.0;
};

EtaBeta resolve_point(const PointOptions& p) {
  const EtaBeta eb{p.eta.resolve("eta", M_PI / 3), p.beta.resolve("beta", std::acos(-std::sqrt(6.0) / 3)),
                   p.phi};
  require_finite({eb.eta, eb.beta, eb.phi});
  return eb;
}

int cmd_states(const PointOptions& p, const Common& c, std::ostream& out) {
  const EtaBeta eb = resolve_point(p);
  const StateSet8 states = generate_states(eb);
  static const char* kBasis[] = {"000", "001", "010", "011", "100", "101", "110", "111"};
  emit_csv(c, out, [&](std::ostream& f) {
    f << "state,basis,re,im\n";
    for (int s = 0; s < 8; ++s) {
      for (int k = 0; k < 8; ++k) {
        f << s + 1 << ',' << kBasis[k] << ',' << fmt12(states[s](k).real()) << ','
          << fmt12(states[s](k).imag()) << '\n';
      }
    }
  });
  const ConcurrenceTriple t = concurrence3(states[0]);
  double spread = 0.0;
  for (const auto& s : states) spread = std::max(spread, concurrence3(s).max_abs_diff(t));
  const EntanglementClass cls = classify(t, c.tol.value_or(1e-9));
  if (c.json) {
    print_json(out, {{"eta", eb.eta}, {"beta", eb.beta}, {"phi", eb.phi}, {"concurrence", triple_json(t)},
                     {"column_spread", spread}, {"class", std::string(to_string(cls.tag))}});
  } else {
    out << "concurrence " << triple_text(t) << "\nclass " << to_string(cls.tag) << '\n';
  }
  return kExitOk;
}

struct ConcurrenceOptions {
  PointOptions point;
  std::optional<double> theta1, theta3;
};

int cmd_concurrence(const ConcurrenceOptions& o, const Common& c, std::ostream& out) {
  json j;
  ConcurrenceTriple numeric, closed;
  if (o.theta1 || o.theta3) {
    const ThreeBodyAngles a{o.theta1.value_or(0.0), o.theta3.value_or(0.0), o.point.phi};
    require_finite({a.theta1, a.theta3, a.phi});
    if (lorentz_add(a.theta1, a.theta3).pole) throw InputError("theta1 - theta3 sits on the pole");
    const ComplexMatrix r = r123_factorized(a);
    numeric = concurrence3(r.col(0));
    const ThetaConcurrence tc = concurrence_from_thetas(a.theta1, a.theta3);
    closed = tc.triple;
    j = {{"theta1", a.theta1}, {"theta2", a.theta2()}, {"theta3", a.theta3}, {"phi", a.phi},
         {"sin2theta2", tc.sin2theta2}};
  } else {
    const EtaBeta eb = resolve_point(o.point);
    numeric = concurrence3(generate_states(eb)[0]);
    closed = concurrence_closed(eb);
    j = {{"eta", eb.eta}, {"beta", eb.beta}, {"phi", eb.phi}};
  }
  const EntanglementClass cls = classify(numeric, c.tol.value_or(1e-9));
  const double diff = numeric.max_abs_diff(closed);
  if (c.json) {
    j["concurrence"] = triple_json(numeric);
    j["closed_form_diff"] = diff;
    j["class"] = std::string(to_string(cls.tag));
    print_json(out, j);
  } else {
    out << "concurrence " << triple_text(numeric) << "\nclosed_form_diff " << fmt12(diff) << "\nclass "
        << to_string(cls.tag) << '\n';
  }
  return kExitOk;
}

// spectrum / berry

int cmd_spectrum(const PointOptions& p, const Common& c, std::ostream& out) {
  const EtaBeta eb = resolve_point(p);
  const SpectrumReport r = eigenbasis3({eb.eta, eb.beta}, eb.phi);
  emit_csv(c, out, [&](std::ostream& f) {
    f << "index,eigenvalue\n";
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) f << i + 1 << ',' << fmt12(r.eigenvalues(i)) << '\n';
  });
  auto num = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
  if (c.json) {
    print_json(out, {{"e_zero", r.e_zero}, {"e_plus", r.e_plus}, {"e_minus", r.e_minus},
                     {"multiplicity", r.multiplicity}, {"max_level_error", r.max_level_error},
                     {"degenerate", r.degenerate},
                     {"projector_distance",
                      {num(r.projector_distance[0]), num(r.projector_distance[1]), num(r.projector_distance[2])}}});
  } else {
    out << "levels " << fmt12(r.e_zero) << ' ' << fmt12(r.e_plus) << ' ' << fmt12(r.e_minus) << "\nmultiplicity "
        << r.multiplicity[0] << ' ' << r.multiplicity[1] << ' ' << r.multiplicity[2] << "\nmax_level_error "
        << fmt12(r.max_level_error) << "\nprojector_distance " << fmt12(r.projector_distance[0]) << ' '
        << fmt12(r.projector_distance[1]) << ' ' << fmt12(r.projector_distance[2]) << '\n';
  }
  return kExitOk;
}

int cmd_berry(const PointOptions& p, int steps, const Common& c, std::ostream& out) {
  const EtaBeta eb = resolve_point(p);
  const double plus = berry_phase({eb.eta, eb.beta}, Band::Plus, steps);
  const double minus = berry_phase({eb.eta, eb.beta}, Band::Minus, steps);
  const double plus_expected = -M_PI * (1.0 - std::sin(eb.eta));
  const double minus_expected = -M_PI * (1.0 + std::sin(eb.eta));
  if (c.json) {
    print_json(out, {{"eta", eb.eta}, {"beta", eb.beta}, {"steps", steps}, {"plus", plus},
                     {"plus_expected", plus_expected}, {"minus", minus}, {"minus_expected", minus_expected}});
  } else {
    out << "plus " << fmt12(plus) << " expected " << fmt12(plus_expected) << "\nminus " << fmt12(minus)
        << " expected " << fmt12(minus_expected) << '\n';
  }
  return kExitOk;
}

// fig1 / zeromode

int cmd_fig1(int grid, const Common& c, std::ostream& out) {
  if (grid < 1) throw InputError("--grid must be positive");
  std::vector<double> betas;
  for (int i = 0; i < grid; ++i) betas.push_back((i + 0.5) * (M_PI / 2) / grid);
  betas.push_back(std::acos(std::sqrt(6.0) / 3));
  std::sort(betas.begin(), betas.end());
  const auto rows = fig1_data(betas);
  emit_csv(c, out, [&](std::ostream& f) { write_fig1_csv(f, rows); });
  if (c.json) print_json(out, {{"rows", rows.size()}});
  return kExitOk;
}

int cmd_zeromode(const AngleInput& beta_in, const Common& c, std::ostream& out) {
  const double beta = beta_in.resolve("beta", std::acos(std::sqrt(6.0) / 3));
  require_finite({beta});
  const ZeroModeReport r = boundary_nullspace(beta, zero_mode_cubic(beta));
  if (c.json) {
    json roots = json::array();
    for (const auto& x : r.roots) roots.push_back({x.real(), x.imag()});
    print_json(out, {{"beta", beta}, {"roots", roots}, {"moduli", r.moduli}, {"inside_count", r.inside_count},
                     {"boundary_rank", r.boundary_rank}, {"smallest_singular", r.smallest_singular},
                     {"unpaired_mf", r.unpaired_mf}, {"gap_closed", r.gap_closed}});
  } else {
    for (const auto& x : r.roots) {
      out << "root " << fmt12(x.real()) << ' ' << fmt12(x.imag()) << " modulus " << fmt12(std::abs(x)) << '\n';
    }
    out << "inside_count " << r.inside_count << "\nboundary_rank " << r.boundary_rank << "\nunpaired_mf "
        << (r.unpaired_mf ? "true" : "false") << "\ngap_closed " << (r.gap_closed ? "true" : "false") << '\n';
  }
  return kExitOk;
}

// transfer

struct TransferOptions {
  int n = 6;
  AngleInput beta;
  double theta = 0.0;
  int theta_grid = 0;
  double t_max = 20.0;
  int nt = 5001;
  int m1 = 1, m2 = 2, l1 = 3, l2 = 4;
};

int cmd_transfer(const TransferOptions& o, const Common& c, std::ostream& out) {
  TransferSpec spec{o.n, o.beta.resolve("beta", M_PI / 3), o.theta, o.m1, o.m2, o.t_max, o.nt};
  require_finite({spec.beta, spec.theta_ac, spec.t_max});
  validate(spec);
  if (!(spec.t_max > 0.0)) throw InputError("--t-max must be positive");
  if (o.theta_grid < 0 || o.theta_grid == 1) throw InputError("--theta-grid needs at least 2 points");
  const std::vector<double> thetas = o.theta_grid ? linspace(-M_PI, M_PI, o.theta_grid) : std::vector{o.theta};
  const std::vector<double> times = linspace(0.0, spec.t_max, spec.n_t);

  MaxReport rep;
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw InputError("cannot open output file " + c.out_path);
    rep = sweep(spec, o.l1, o.l2, thetas, times, &f);
  } else {
    rep = sweep(spec, o.l1, o.l2, thetas, times);
  }
  print_json(out, {{"c_max", rep.c_max}, {"theta_star", rep.theta_star}, {"t_star", rep.t_star}, {"n", rep.n},
                   {"beta", rep.beta}, {"m1", rep.m1}, {"m2", rep.m2}, {"l1", rep.l1}, {"l2", rep.l2}});
  return kExitOk;
}

// Config file entries become flags placed ahead of the command-line ones.
std::vector<std::string> config_args(const std::string& path, std::string& command) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      if (!value.is_string()) throw InputError("config file: command must be a string");
      command = value.get<std::string>();
      continue;
    }
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(value.is_number_float() ? fmt17(value.get<double>()) : value.dump());
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (const auto& item : value) {
        if (!item.is_number()) throw InputError("config file: arrays must hold numbers (" + key + ")");
        args.push_back(flag);
        args.push_back(fmt17(item.get<double>()));
      }
    } else {
      throw InputError("config file: unsupported value for " + key);
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    // pull out --config before parsing
    std::vector<std::string> args;
    std::string config_path;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--config") {
        if (i + 1 >= raw_args.size()) throw InputError("--config needs a path");
        config_path = raw_args[++i];
      } else if (raw_args[i].rfind("--config=", 0) == 0) {
        config_path = raw_args[i].substr(9);
      } else {
        args.push_back(raw_args[i]);
      }
    }
    if (!config_path.empty()) {
      std::string command;
      std::vector<std::string> extra = config_args(config_path, command);
      const bool has_command = !args.empty() && args.front().rfind("-", 0) != 0;
      if (!has_command) {
        if (command.empty()) throw InputError("no subcommand given");
        args.insert(args.begin(), command);
      } else if (!command.empty() && command != args.front()) {
        throw InputError("config file command does not match the subcommand");
      }
      args.insert(args.begin() + 1, extra.begin(), extra.end());
    }

    CLI::App app{"Yang-Baxter three-body S-matrix toolkit", "ybe"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    Common common;
    VerifyOptions verify;
    PointOptions point;
    ConcurrenceOptions conc;
    int berry_steps = 10000;
    int fig1_grid = 400;
    AngleInput zero_beta;
    TransferOptions transfer;

    auto* v = app.add_subcommand("verify", "Run identity suites");
    add_common(v, common);
    v->add_option("--suite", verify.suite, "ybe, chart, spectrum, berry, jw, zeromode or all");
    v->add_option("--samples", verify.samples, "Random samples per suite");
    v->add_option("--eta", verify.etas, "Berry suite eta values")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    v->add_option("--beta-grid", verify.beta_grid, "Zero-mode beta samples");
    v->add_option("--steps", verify.steps, "Berry loop steps");

    auto* st = app.add_subcommand("states", "Columns of the three-body matrix and their concurrences");
    add_common(st, common);
    add_angle(st, "eta", point.eta);
    add_angle(st, "beta", point.beta);
    st->add_option("--phi", point.phi, "Single-qubit phase");

    auto* co = app.add_subcommand("concurrence", "Concurrence triple from (eta, beta) or (theta1, theta3)");
    add_common(co, common);
    add_angle(co, "eta", conc.point.eta);
    add_angle(co, "beta", conc.point.beta);
    co->add_option("--phi", conc.point.phi, "Single-qubit phase");
    co->add_option("--theta1", conc.theta1, "First two-body angle");
    co->add_option("--theta3", conc.theta3, "Third two-body angle");

    auto* sp = app.add_subcommand("spectrum", "Three-body Hamiltonian levels and eigenspaces");
    add_common(sp, common);
    add_angle(sp, "eta", point.eta);
    add_angle(sp, "beta", point.beta);
    sp->add_option("--phi", point.phi, "Single-qubit phase");

    auto* be = app.add_subcommand("berry", "Band Berry phases");
    add_common(be, common);
    add_angle(be, "eta", point.eta);
    add_angle(be, "beta", point.beta);
    be->add_option("--steps", berry_steps, "Loop steps");

    auto* fg = app.add_subcommand("fig1", "Root moduli of the zero-mode cubic");
    add_common(fg, common);
    fg->add_option("--grid", fig1_grid, "Number of beta samples in (0, pi/2)");

    auto* zm = app.add_subcommand("zeromode", "End-mode analysis at one beta");
    add_common(zm, common);
    add_angle(zm, "beta", zero_beta);

    auto* tr = app.add_subcommand("transfer", "One-magnon entanglement transfer");
    add_common(tr, common);
    tr->add_option("--n", transfer.n, "Ring length");
    add_angle(tr, "beta", transfer.beta);
    tr->add_option("--theta", transfer.theta, "Phase per bond");
    tr->add_option("--theta-grid", transfer.theta_grid, "Sweep theta over [-pi, pi] with this many points");
    tr->add_option("--t-max", transfer.t_max, "End of the time grid");
    tr->add_option("--nt", transfer.nt, "Time grid points");
    tr->add_option("--m1", transfer.m1, "First initially entangled site");
    tr->add_option("--m2", transfer.m2, "Second initially entangled site");
    tr->add_option("--l1", transfer.l1, "First target site");
    tr->add_option("--l2", transfer.l2, "Second target site");

    std::vector<const char*> argv{"ybe"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      const auto parsed = app.get_subcommands();
      out << (parsed.empty() ? app.help() : parsed.front()->help());
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    if (common.tol) require_finite({*common.tol});

    if (v->parsed()) return cmd_verify(verify, common, out);
    if (st->parsed()) return cmd_states(point, common, out);
    if (co->parsed()) return cmd_concurrence(conc, common, out);
    if (sp->parsed()) return cmd_spectrum(point, common, out);
    if (be->parsed()) return cmd_berry(point, berry_steps, common, out);
    if (fg->parsed()) return cmd_fig1(fig1_grid, common, out);
    if (zm->parsed()) return cmd_zeromode(zero_beta, common, out);
    if (tr->parsed()) return cmd_transfer(transfer, common, out);
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace ybe::cli
