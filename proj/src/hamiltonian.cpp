#include "ybe/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ybe/rmatrix.hpp"

namespace ybe {

namespace {

constexpr double kConvergenceTol = 1e-5;
constexpr double kSpectrumTol = 1e-8;

ComplexVector ket8(std::initializer_list<std::pair<Complex, int>> terms) {
  ComplexVector v = ComplexVector::Zero(8);
  for (const auto& [c, idx] : terms) v(idx) += c;
  return v;
}

double loop_phase(const std::function<ComplexVector(double)>& state, double period, int steps) {
  double sum = 0.0;
  ComplexVector prev = state(0.0);
  const ComplexVector first = prev;
  for (int k = 1; k <= steps; ++k) {
    const ComplexVector next = (k == steps) ? first : state(period * k / steps);
    sum += std::arg(prev.dot(next));
    prev = next;
  }
  return -sum;
}

}  // namespace

ComplexMatrix gauge_potential(const std::function<ComplexMatrix(double)>& path, double t,
                              double h, double hbar) {
  const ComplexMatrix d = (path(t + h) - path(t - h)) / (2.0 * h);
  return kI * hbar * d * path(t).adjoint();
}

ComplexMatrix h2_local(double theta, double chi, double chi_rate, double hbar) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix sp = spin_plus();
  const ComplexMatrix sm = spin_minus();
  const ComplexMatrix sz = spin_z();
  const Complex e = std::polar(1.0, chi);
  const double s = std::sin(theta);
  const ComplexMatrix bracket = (s / 2.0) * (kron(sz, id) + kron(id, sz)) +
                                std::cos(theta) * (e * kron(sp, sp) + std::conj(e) * kron(sm, sm));
  return -hbar * chi_rate * s * bracket;
}

std::array<TwoBodyEigenpair, 2> h2_eigenpairs(double theta, double chi, double chi_rate,
                                              double hbar) {
  const double a = M_PI / 4.0 - theta / 2.0;
  const Complex e = std::polar(1.0, chi);
  ComplexVector plus = ComplexVector::Zero(4);
  ComplexVector minus = ComplexVector::Zero(4);
  plus(0) = std::cos(a);
  plus(3) = std::sin(a) * std::conj(e);
  minus(0) = -std::sin(a) * e;
  minus(3) = std::cos(a);
  const double ep = -hbar * chi_rate * std::sin(theta);
  return {TwoBodyEigenpair{ep, plus}, TwoBodyEigenpair{-ep, minus}};
}

std::array<ComplexMatrix, 3> bispin_operators() {
  ComplexMatrix sx = ComplexMatrix::Zero(4, 4);
  ComplexMatrix sy = ComplexMatrix::Zero(4, 4);
  ComplexMatrix sz = ComplexMatrix::Zero(4, 4);
  sx(0, 3) = sx(3, 0) = 1.0;
  sy(0, 3) = -kI;
  sy(3, 0) = kI;
  sz(0, 0) = 1.0;
  sz(3, 3) = -1.0;
  return {sx, sy, sz};
}

Eigen::Vector3d bispin_axis(double theta, double chi) {
  return {std::cos(theta) * std::cos(chi), -std::cos(theta) * std::sin(chi), std::sin(theta)};
}

double berry_phase_2body(double theta, int steps) {
  if (steps < 100) throw InputError("berry_phase_2body: need at least 100 steps");
  return loop_phase([&](double chi) { return h2_eigenpairs(theta, chi)[0].state; }, 2.0 * M_PI,
                    steps);
}

ComplexMatrix h3_local(const DriveParams& dp, double phi) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix sp = spin_plus();
  const ComplexMatrix sm = spin_minus();
  const ComplexMatrix sz = spin_z();
  const double se = std::sin(dp.eta);
  const double sb = std::sin(dp.beta);
  const double cb = std::cos(dp.beta);
  const double sin2eta = std::sin(2.0 * dp.eta);
  const Complex e2 = std::polar(1.0, 2.0 * phi);
  auto herm = [](const ComplexMatrix& t) -> ComplexMatrix { return t + t.adjoint(); };

  ComplexMatrix h =
      -se * se *
      ((sb * sb + 1.0) / 2.0 * (kron(sz, id, id) + kron(id, id, sz)) + cb * cb * kron(id, sz, id));
  h += -sin2eta * cb / std::sqrt(2.0) * herm(e2 * (kron(sp, sp, id) + kron(id, sp, sp)));
  h += se * se * std::sin(2.0 * dp.beta) / std::sqrt(2.0) * herm(kron(sp, sm, id) + kron(id, sp, sm));
  h += -sin2eta * sb * herm(e2 * kron(sp, sz, sp));
  h += -se * se * cb * cb * (kron(sp, sz, sm) + kron(sm, sz, sp));
  return dp.hbar * dp.phi_rate * h;
}

StateSet8 eigenstates3(double eta, double beta, double phi) {
  const double se = std::sin(eta);
  const double ce = std::cos(eta);
  const double sb = std::sin(beta);
  const double cb = std::cos(beta);
  const Complex e = std::polar(1.0, 2.0 * phi);
  const double r2 = std::sqrt(2.0);
  const double sgn = ce >= 0.0 ? 1.0 : -1.0;
  const double norm34 = 1.0 / std::sqrt(1.0 + sb * sb);
  // |klm> index = 4k + 2l + m
  const double up = std::sqrt(std::max(0.0, 1.0 + se));
  const double dn = std::sqrt(std::max(0.0, 1.0 - se));

  StateSet8 a;
  a[0] = ket8({{-1.0 / r2, 3}, {1.0 / r2, 6}});
  a[1] = ket8({{-1.0 / r2, 1}, {1.0 / r2, 4}});
  a[2] = norm34 * ket8({{-r2 * sb, 3}, {cb, 5}});
  a[3] = norm34 * ket8({{r2 * sb, 1}, {cb, 2}});
  a[4] = ket8({{-cb * dn / 2.0 * e, 1}, {r2 * sb * dn / 2.0 * e, 2}, {-cb * dn / 2.0 * e, 4},
               {sgn * up / r2, 7}});
  a[5] = ket8({{-dn / r2 * e, 0}, {sgn * up / 2.0 * cb, 3}, {sgn * up / 2.0 * r2 * sb, 5},
               {sgn * up / 2.0 * cb, 6}});
  a[6] = ket8({{cb * up / 2.0 * e, 1}, {-r2 * sb * up / 2.0 * e, 2}, {cb * up / 2.0 * e, 4},
               {sgn * dn / r2, 7}});
  a[7] = ket8({{up / r2 * e, 0}, {sgn * dn / 2.0 * cb, 3}, {sgn * dn / 2.0 * r2 * sb, 5},
               {sgn * dn / 2.0 * cb, 6}});
  return a;
}

SpectrumReport eigenbasis3(const DriveParams& dp, double phi) {
  const ComplexMatrix h = h3_local(dp, phi);
  const auto eig = herm_eig(h);
  const double scale = dp.hbar * dp.phi_rate;
  SpectrumReport rep;
  rep.eigenvalues = eig.eigenvalues;
  rep.e_plus = 2.0 * scale * std::sin(dp.eta);
  rep.e_minus = -rep.e_plus;

  std::array<ComplexMatrix, 3> found;
  for (auto& f : found) f.resize(8, 0);
  const std::array<double, 3> levels{rep.e_zero, rep.e_plus, rep.e_minus};
  for (Eigen::Index i = 0; i < 8; ++i) {
    const double lam = eig.eigenvalues(i);
    int best = 0;
    for (int l = 1; l < 3; ++l) {
      if (std::abs(lam - levels[l]) < std::abs(lam - levels[best])) best = l;
    }
    rep.max_level_error = std::max(rep.max_level_error, std::abs(lam - levels[best]));
    ++rep.multiplicity[best];
    found[best].conservativeResize(Eigen::NoChange, found[best].cols() + 1);
    found[best].col(found[best].cols() - 1) = eig.eigenvectors.col(i);
  }

  const double tiny = 1e-8;
  rep.degenerate = std::abs(std::sin(dp.eta)) <= tiny || std::abs(std::cos(dp.eta)) <= tiny ||
                   std::abs(std::cos(dp.beta)) <= tiny;
  if (rep.degenerate || rep.multiplicity != std::array<int, 3>{4, 2, 2}) {
    rep.projector_distance.fill(std::numeric_limits<double>::quiet_NaN());
    return rep;
  }

  const StateSet8 a = eigenstates3(dp.eta, dp.beta, phi);
  const std::array<std::pair<int, int>, 3> groups{{{0, 4}, {4, 2}, {6, 2}}};
  for (int l = 0; l < 3; ++l) {
    ComplexMatrix basis(8, groups[l].second);
    for (int j = 0; j < groups[l].second; ++j) basis.col(j) = a[groups[l].first + j];
    const ComplexMatrix p_closed = span_projector(basis);
    const ComplexMatrix p_num = found[l] * found[l].adjoint();
    rep.projector_distance[l] = (p_closed - p_num).norm();
  }
  return rep;
}

double berry_phase_state(double eta, double beta, int index, int steps) {
  if (index < 1 || index > 8) throw InputError("berry_phase_state: index must be 1..8");
  if (steps < 100) throw InputError("berry_phase_state: need at least 100 steps");
  return loop_phase([&](double phi) { return eigenstates3(eta, beta, phi)[index - 1]; }, M_PI,
                    steps);
}

double berry_phase(const DriveParams& dp, Band band, int steps) {
  if (steps < 100) throw InputError("berry_phase: need at least 100 steps");
  const int first = band == Band::Plus ? 5 : 7;
  const double g = berry_phase_state(dp.eta, dp.beta, first, steps);
  const double g_partner = berry_phase_state(dp.eta, dp.beta, first + 1, steps);
  const double g_half = berry_phase_state(dp.eta, dp.beta, first, steps / 2);
  if (std::abs(g - g_half) > kConvergenceTol) {
    throw NumericalError("berry_phase: loop did not converge");
  }
  if (std::abs(g - g_partner) > kConvergenceTol) {
    throw NumericalError("berry_phase: band members disagree");
  }
  if (offdiagonal_connection(dp.eta, dp.beta, 0.3, band) > kSpectrumTol) {
    throw NumericalError("berry_phase: connection is not diagonal");
  }
  return g;
}

double offdiagonal_connection(double eta, double beta, double phi, Band band) {
  const int i = band == Band::Plus ? 4 : 6;
  const double h = 1e-6;
  const ComplexVector d =
      (eigenstates3(eta, beta, phi + h)[i + 1] - eigenstates3(eta, beta, phi - h)[i + 1]) / (2 * h);
  return std::abs(eigenstates3(eta, beta, phi)[i].dot(d));
}

}  // namespace ybe
