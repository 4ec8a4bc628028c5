#include "ybe/chain.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ybe/format.hpp"
#include "ybe/hamiltonian.hpp"
#include "ybe/polynomial.hpp"

namespace ybe {

namespace {

constexpr double kOmegaDeltaTol = 1e-10;
constexpr double kInsideTol = 1e-10;
constexpr double kGapTol = 1e-8;
constexpr double kNullTol = 1e-10;

void check_spec(const ChainSpec& spec, int max_sites) {
  if (spec.n_sites < 3) throw InputError("chain: need at least 3 sites");
  if (spec.n_sites > max_sites) throw InputError("chain: too many sites for a dense matrix");
}

// Three-site terms (0-based first site, sites) for the given boundary.
std::vector<std::array<int, 3>> triples(int n, Boundary b) {
  std::vector<std::array<int, 3>> out;
  const int count = b == Boundary::Periodic ? n : n - 2;
  for (int s = 0; s < count; ++s) out.push_back({s, (s + 1) % n, (s + 2) % n});
  return out;
}

}  // namespace

ComplexMatrix spin_chain_matrix(const ChainSpec& spec) {
  check_spec(spec, kMaxDenseSites);
  const ComplexMatrix local = h3_local(DriveParams{spec.eta, spec.beta, 1.0, 1.0}, spec.phi);
  const Eigen::Index dim = Eigen::Index{1} << spec.n_sites;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : triples(spec.n_sites, spec.boundary)) {
    const int sites[] = {t[0] + 1, t[1] + 1, t[2] + 1};
    accumulate_local(h, local, sites, spec.n_sites);
  }
  return h;
}

std::vector<Eigen::Index> one_magnon_indices(int n_sites) {
  const Eigen::Index all = (Eigen::Index{1} << n_sites) - 1;
  std::vector<Eigen::Index> idx;
  for (int s = 1; s <= n_sites; ++s) idx.push_back(all & ~(Eigen::Index{1} << (n_sites - s)));
  return idx;
}

ComplexMatrix one_magnon_block(const ComplexMatrix& h, int n_sites) {
  if (h.rows() != (Eigen::Index{1} << n_sites)) throw InputError("one_magnon_block: size mismatch");
  const auto idx = one_magnon_indices(n_sites);
  ComplexMatrix b(n_sites, n_sites);
  for (int i = 0; i < n_sites; ++i) {
    for (int j = 0; j < n_sites; ++j) b(i, j) = h(idx[i], idx[j]);
  }
  return b;
}

KitaevParams kitaev_params(double eta, double beta) {
  const double se = std::sin(eta), ce = std::cos(eta);
  const double sb = std::sin(beta), cb = std::cos(beta);
  const double r2 = std::sqrt(2.0);
  return {se * se * (1.0 + sb * sb), 2.0 * se * se * cb * cb, -r2 * se * se * cb * sb,
          -se * se * cb * cb,        -r2 * se * ce * cb,      2.0 * se * ce * sb};
}

FermionTable fermion_quadratic(const ChainSpec& spec) {
  if (spec.n_sites < 3) throw InputError("fermion_quadratic: need at least 3 sites");
  const int n = spec.n_sites;
  const double s2 = std::pow(std::sin(spec.eta), 2);
  const double sb = std::sin(spec.beta), cb = std::cos(spec.beta);
  const double sin2eta = std::sin(2.0 * spec.eta);
  const Complex e2 = std::polar(1.0, 2.0 * spec.phi);
  const double r2 = std::sqrt(2.0);

  const double onsite_end = -s2 * (1.0 + sb * sb);
  const double onsite_mid = -2.0 * s2 * cb * cb;
  const double hop_nn = r2 / 2.0 * s2 * std::sin(2.0 * spec.beta);
  const Complex pair_nn = -r2 / 2.0 * sin2eta * cb * e2;
  const double hop_nnn = s2 * cb * cb;
  const Complex pair_nnn = sin2eta * sb * e2;

  FermionTable t{n, ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n), 0.0};
  auto hop = [&](int i, int j, double v) {
    t.hopping(i, j) += v;
    t.hopping(j, i) += v;
  };
  auto pair = [&](int i, int j, Complex v) {
    t.pairing(i, j) += v;
    t.pairing(j, i) -= v;
  };
  for (const auto& [a, b, c] : triples(n, spec.boundary)) {
    // onsite terms eps (n - 1/2)
    t.hopping(a, a) += onsite_end;
    t.hopping(b, b) += onsite_mid;
    t.hopping(c, c) += onsite_end;
    t.constant -= 0.5 * (2.0 * onsite_end + onsite_mid);
    hop(a, b, hop_nn);
    hop(b, c, hop_nn);
    pair(a, b, pair_nn);
    pair(b, c, pair_nn);
    hop(a, c, hop_nnn);
    pair(a, c, pair_nnn);
  }
  return t;
}

ComplexMatrix one_particle_block(const FermionTable& t) {
  return t.hopping + t.constant * ComplexMatrix::Identity(t.n_sites, t.n_sites);
}

ComplexMatrix bdg_matrix(const FermionTable& t) {
  const int n = t.n_sites;
  ComplexMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = t.hopping;
  m.topRightCorner(n, n) = t.pairing;
  m.bottomLeftCorner(n, n) = t.pairing.adjoint();
  m.bottomRightCorner(n, n) = -t.hopping.transpose();
  return m;
}

BandEnergies band_spectrum(double eta, double beta, double k, double phi) {
  const double s2 = std::pow(std::sin(eta), 2);
  const double sb = std::sin(beta), cb = std::cos(beta);
  const double r2 = std::sqrt(2.0);
  const double x = -s2 * (6.0 - std::pow(r2 * sb + 2.0 * cb * std::cos(k), 2));
  const Complex y = kI * std::sin(2.0 * eta) * (r2 * cb * std::sin(k) - sb * std::sin(2.0 * k)) *
                    std::polar(1.0, 2.0 * phi);
  const double e = std::sqrt(x * x / 4.0 + std::norm(y));
  return {e, -e};
}

ComplexMatrix momentum_block(double eta, double beta, double phi, double k) {
  // Middle site of a 7-site open chain sees every bulk term.
  const FermionTable t = fermion_quadratic(ChainSpec{7, eta, beta, phi, Boundary::Open});
  const int j = 3;
  Complex xi{0.0, 0.0};
  Complex delta{0.0, 0.0};
  for (int r = -2; r <= 2; ++r) {
    xi += t.hopping(j, j + r) * std::polar(1.0, k * r);
    delta += t.pairing(j, j + r) * std::polar(1.0, -k * r);
  }
  ComplexMatrix m(2, 2);
  m << xi, delta, std::conj(delta), -xi;
  return 0.5 * m;
}

double eta_for_omega2_eq_delta2(double beta) {
  const double cb = std::cos(beta);
  if (std::abs(cb) < 1e-12) throw InputError("eta_for_omega2_eq_delta2: cos(beta) vanishes");
  return std::atan(-2.0 * std::sin(beta) / (cb * cb));
}

RealMatrix majorana_matrix(const ChainSpec& spec) {
  if (spec.boundary != Boundary::Open) throw InputError("majorana_matrix: open chain only");
  if (spec.n_sites < 4) throw InputError("majorana_matrix: need at least 4 sites");
  const KitaevParams p = kitaev_params(spec.eta, spec.beta);
  if (std::abs(p.omega2 - p.delta2) > kOmegaDeltaTol) {
    throw InputError(
        "majorana_matrix: requires omega2 = delta2; use fermion_quadratic for the general case");
  }
  const int n = spec.n_sites;
  RealMatrix a = RealMatrix::Zero(2 * n, 2 * n);
  auto add = [&](int l, int m, double v) {  // 1-based Majorana labels
    a(l - 1, m - 1) += v;
    a(m - 1, l - 1) -= v;
  };
  for (int j = 1; j <= n; ++j) {
    const double onsite = p.mu1 * ((j <= n - 2) + (j >= 3)) + p.mu2 * (j >= 2 && j <= n - 1);
    add(2 * j - 1, 2 * j, -onsite);
  }
  for (int j = 1; j < n; ++j) {
    const double w = (j <= n - 2) + (j >= 2);
    add(2 * j, 2 * j + 1, w * (p.delta1 + p.omega1));
    add(2 * j - 1, 2 * j + 2, w * (p.delta1 - p.omega1));
  }
  for (int j = 1; j <= n - 2; ++j) {
    add(2 * j, 2 * j + 3, p.delta2 + p.omega2);
    add(2 * j - 1, 2 * j + 4, p.delta2 - p.omega2);
  }
  return a;
}

std::array<Complex, 3> zero_mode_cubic(double beta) {
  if (std::abs(std::cos(beta)) <= 1e-12) throw InputError("zero_mode_cubic: tan(beta) diverges");
  const double b = std::tan(beta);
  const double r2 = std::sqrt(2.0);
  const double coeffs[] = {2 * b * b + 1, -2 * r2 * (b * b * b + b), 2 * b * b - 1, r2 * b};
  const auto r = polynomial_roots(coeffs);
  if (r.size() != 3) throw NumericalError("zero_mode_cubic: expected three roots");
  return {r[0], r[1], r[2]};
}

ZeroModeReport boundary_nullspace(double beta, const std::array<Complex, 3>& roots) {
  ZeroModeReport rep;
  rep.roots = roots;
  for (int i = 0; i < 3; ++i) {
    rep.moduli[i] = std::abs(roots[i]);
    if (rep.moduli[i] <= 1.0 + kInsideTol) ++rep.inside_count;
    if (std::abs(rep.moduli[i] - 1.0) <= kGapTol) rep.gap_closed = true;
  }
  if (rep.inside_count < 2) return rep;

  const KitaevParams p = kitaev_params(eta_for_omega2_eq_delta2(beta), beta);
  auto f1 = [&](Complex x) { return -p.mu1 * x + (p.delta1 - p.omega1) * x * x; };
  auto f2 = [&](Complex x) {
    return -p.omega2 - p.delta2 - (p.omega1 + p.delta1) * x - p.mu1 * x * x;
  };
  // Two smallest-modulus roots. The far-end equations are -f1, f2 times
  // x^{-N-1}, a column scaling that leaves the rank unchanged.
  ComplexMatrix m(2, 2);
  for (int i = 0; i < 2; ++i) {
    m(0, i) = f1(roots[i]);
    m(1, i) = f2(roots[i]);
    const double cn = m.col(i).norm();
    if (cn > 0.0) m.col(i) /= cn;
  }
  // A repeated root gives a single independent mode.
  if (std::abs(roots[0] - roots[1]) <= kGapTol) m.col(1).setZero();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto sv = svd.singularValues();
  const double top = std::max(sv(0), 1e-300);
  rep.smallest_singular = sv(1);
  rep.boundary_rank = (sv(0) > kNullTol) + (sv(1) > kNullTol * top);
  const bool nullspace = rep.boundary_rank < 2 && m.col(1).norm() > 0.0;
  rep.unpaired_mf = nullspace && !rep.gap_closed;
  return rep;
}

std::array<bool, 3> mf_inequalities(double eta, double beta) {
  if (std::abs(std::sin(eta)) <= 1e-12) throw InputError("mf_inequalities: eta must be nonzero");
  const double s2b = std::abs(std::sqrt(2.0) * std::sin(2.0 * beta));
  const double sb2 = std::pow(std::sin(beta), 2);
  const double cb2 = std::pow(std::cos(beta), 2);
  return {s2b > 1.0 + sb2, s2b > 2.0 * cb2, 2.0 * cb2 > 1.0 + sb2};
}

std::vector<Fig1Row> fig1_data(const std::vector<double>& beta_grid) {
  std::vector<Fig1Row> rows;
  rows.reserve(beta_grid.size());
  for (double beta : beta_grid) {
    if (!(beta > 0.0 && beta < M_PI / 2.0)) throw InputError("fig1_data: beta must lie in (0, pi/2)");
    const auto r = zero_mode_cubic(beta);
    rows.push_back({beta, {std::abs(r[0]), std::abs(r[1]), std::abs(r[2])}});
  }
  return rows;
}

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows) {
  out << "beta,abs_x1,abs_x2,abs_x3\n";
  for (const auto& r : rows) {
    out << fmt12(r.beta) << ',' << fmt12(r.abs_x[0]) << ',' << fmt12(r.abs_x[1]) << ','
        << fmt12(r.abs_x[2]) << '\n';
  }
}

}  // namespace ybe
