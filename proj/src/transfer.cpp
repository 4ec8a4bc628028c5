#include "ybe/transfer.hpp"

#include <cmath>
#include <ostream>

#include "ybe/format.hpp"

namespace ybe {

namespace {

constexpr double kGoldenTol = 1e-6;

void check_pair(const TransferSpec& spec, int l1, int l2) {
  if (l1 == l2) throw InputError("transfer: l1 and l2 must differ");
  if (l1 < 1 || l2 < 1 || l1 > spec.n_sites || l2 > spec.n_sites) {
    throw InputError("transfer: l1/l2 out of range");
  }
}

// Fourier weights w_kj with alpha_k(t) = sum_j w_kj exp(-i E_j t).
ComplexMatrix fourier_weights(const TransferSpec& spec) {
  const int n = spec.n_sites;
  ComplexMatrix w(n, n);
  const double norm = 1.0 / (std::sqrt(2.0) * n);
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      const double a = 2.0 * M_PI * j / n;
      w(k - 1, j - 1) = norm * (std::polar(1.0, a * (k - spec.m1)) + std::polar(1.0, a * (k - spec.m2)));
    }
  }
  return w;
}

// Pair concurrence evaluator for a fixed theta.
struct PairEvaluator {
  RealVector energies;
  ComplexVector w1;
  ComplexVector w2;

  PairEvaluator(const TransferSpec& spec, int l1, int l2) : energies(ej_spectrum(spec)) {
    const ComplexMatrix w = fourier_weights(spec);
    w1 = w.row(l1 - 1).transpose();
    w2 = w.row(l2 - 1).transpose();
  }

  double operator()(double t) const {
    Complex a1{0.0, 0.0}, a2{0.0, 0.0};
    for (Eigen::Index j = 0; j < energies.size(); ++j) {
      const Complex ph = std::polar(1.0, -energies(j) * t);
      a1 += w1(j) * ph;
      a2 += w2(j) * ph;
    }
    return 2.0 * std::abs(a1) * std::abs(a2);
  }
};

double golden_max(const PairEvaluator& f, double lo, double hi, double& best_t) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  best_t = 0.5 * (a + b);
  return f(best_t);
}

}  // namespace

void validate(const TransferSpec& spec) {
  if (spec.n_sites < 3 || spec.n_sites > 4096) throw InputError("transfer: n_sites must be >= 3");
  if (!(1 <= spec.m1 && spec.m1 < spec.m2 && spec.m2 <= spec.n_sites)) {
    throw InputError("transfer: need 1 <= m1 < m2 <= n_sites");
  }
  if (spec.n_t < 2) throw InputError("transfer: n_t must be >= 2");
  if (!std::isfinite(spec.beta) || !std::isfinite(spec.theta_ac) || !std::isfinite(spec.t_max) ||
      spec.t_max < 0.0) {
    throw InputError("transfer: parameters must be finite, t_max >= 0");
  }
}

ComplexMatrix one_magnon_h(const TransferSpec& spec) {
  validate(spec);
  const int n = spec.n_sites;
  const Complex nn = std::sqrt(2.0) * std::sin(2.0 * spec.beta) * std::polar(1.0, spec.theta_ac);
  const Complex nnn = std::pow(std::cos(spec.beta), 2) * std::polar(1.0, 2.0 * spec.theta_ac);
  ComplexMatrix h = -4.0 * ComplexMatrix::Identity(n, n);
  for (int s = 0; s < n; ++s) {
    h((s + 1) % n, s) += nn;
    h(s, (s + 1) % n) += std::conj(nn);
    h((s + 2) % n, s) += nnn;
    h(s, (s + 2) % n) += std::conj(nnn);
  }
  return h;
}

RealVector ej_spectrum(const TransferSpec& spec) {
  validate(spec);
  const int n = spec.n_sites;
  const double a = 2.0 * std::sqrt(2.0) * std::sin(2.0 * spec.beta);
  const double b = 2.0 * std::pow(std::cos(spec.beta), 2);
  RealVector e(n);
  for (int j = 1; j <= n; ++j) {
    const double q = 2.0 * M_PI * j / n;
    e(j - 1) = -4.0 + a * std::cos(spec.theta_ac - q) + b * std::cos(2.0 * spec.theta_ac - 2.0 * q);
  }
  return e;
}

ComplexVector alpha_t(const TransferSpec& spec, double t) {
  const RealVector e = ej_spectrum(spec);
  ComplexVector ph(e.size());
  for (Eigen::Index j = 0; j < e.size(); ++j) ph(j) = std::polar(1.0, -e(j) * t);
  return fourier_weights(spec) * ph;
}

ComplexVector alpha_t_evolved(const TransferSpec& spec, double t) {
  const ComplexMatrix h = one_magnon_h(spec);
  ComplexVector psi = ComplexVector::Zero(spec.n_sites);
  psi(spec.m1 - 1) = psi(spec.m2 - 1) = 1.0 / std::sqrt(2.0);
  return matexp_skew(-kI * h, t) * psi;
}

ComplexVector one_magnon_state(const ComplexVector& alphas) {
  const int n = static_cast<int>(alphas.size());
  if (n < 1 || n > kMaxDenseSites) throw InputError("one_magnon_state: too many sites");
  const Eigen::Index all = (Eigen::Index{1} << n) - 1;
  ComplexVector psi = ComplexVector::Zero(all + 1);
  for (int s = 1; s <= n; ++s) psi(all & ~(Eigen::Index{1} << (n - s))) = alphas(s - 1);
  return psi;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw InputError("linspace: count must be positive");
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return v;
}

AmplitudeTimeline amplitude_timeline(const TransferSpec& spec) {
  validate(spec);
  const auto ts = linspace(0.0, spec.t_max, spec.n_t);
  AmplitudeTimeline tl{RealVector(spec.n_t), ComplexMatrix(spec.n_sites, spec.n_t)};
  for (int i = 0; i < spec.n_t; ++i) {
    tl.times(i) = ts[i];
    tl.alphas.col(i) = alpha_t(spec, ts[i]);
  }
  return tl;
}

double concurrence_t(const TransferSpec& spec, int l1, int l2, double t) {
  validate(spec);
  check_pair(spec, l1, l2);
  return PairEvaluator(spec, l1, l2)(t);
}

ConcurrenceTimeline concurrence_timeline(const TransferSpec& spec, int l1, int l2) {
  validate(spec);
  check_pair(spec, l1, l2);
  const PairEvaluator f(spec, l1, l2);
  const auto ts = linspace(0.0, spec.t_max, spec.n_t);
  ConcurrenceTimeline tl{RealVector(spec.n_t), RealVector(spec.n_t)};
  for (int i = 0; i < spec.n_t; ++i) {
    tl.times(i) = ts[i];
    tl.c_values(i) = f(ts[i]);
  }
  return tl;
}

MaxReport sweep(const TransferSpec& spec, int l1, int l2, const std::vector<double>& theta_grid,
                const std::vector<double>& t_grid, std::ostream* csv) {
  validate(spec);
  check_pair(spec, l1, l2);
  if (theta_grid.empty() || t_grid.empty()) throw InputError("sweep: grids must be nonempty");

  MaxReport rep{-1.0, 0.0, 0.0, spec.n_sites, spec.beta, spec.m1, spec.m2, l1, l2};
  std::size_t best_t_index = 0;
  if (csv) *csv << "theta,t,concurrence\n";
  for (double theta : theta_grid) {
    TransferSpec s = spec;
    s.theta_ac = theta;
    const PairEvaluator f(s, l1, l2);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      const double c = f(t_grid[i]);
      if (csv) *csv << fmt12(theta) << ',' << fmt12(t_grid[i]) << ',' << fmt12(c) << '\n';
      if (c > rep.c_max) {
        rep.c_max = c;
        rep.theta_star = theta;
        rep.t_star = t_grid[i];
        best_t_index = i;
      }
    }
  }

  if (t_grid.size() > 1) {
    TransferSpec s = spec;
    s.theta_ac = rep.theta_star;
    const PairEvaluator f(s, l1, l2);
    const double lo = t_grid[best_t_index == 0 ? 0 : best_t_index - 1];
    const double hi = t_grid[std::min(best_t_index + 1, t_grid.size() - 1)];
    double t_ref = rep.t_star;
    const double c_ref = golden_max(f, lo, hi, t_ref);
    if (c_ref > rep.c_max) {
      rep.c_max = c_ref;
      rep.t_star = t_ref;
    }
  }
  return rep;
}

double n4_frequency(double beta) {
  return std::sqrt(2.0) * std::sin(2.0 * beta) + 2.0 * std::pow(std::cos(beta), 2);
}

}  // namespace ybe
