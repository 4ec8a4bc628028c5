#include "ybe/threebody.hpp"

#include <cmath>

#include "ybe/rmatrix.hpp"

namespace ybe {

double ThreeBodyAngles::theta2() const { return lorentz_add(theta1, theta3).theta2; }

ComplexMatrix SigmaTriple::dot(const Eigen::Vector3d& n) const {
  return n(0) * sigma[0] + n(1) * sigma[1] + n(2) * sigma[2];
}

Eigen::Vector3d rotation_axis(double beta) {
  const double c = std::cos(beta) / std::sqrt(2.0);
  return {c, c, std::sin(beta)};
}

EtaBeta eta_beta_from(const ThreeBodyAngles& a) {
  const double t2 = a.theta2();
  const double cd = std::cos(a.theta1 - a.theta3);
  const double root = std::sqrt(1.0 + cd * cd);
  const double cos_eta = std::cos(t2) * std::cos(a.theta1 + a.theta3);
  const double sin_eta = std::sin(t2) * root;
  const double cos_beta = std::sqrt(2.0) * cd / root;
  const double sin_beta = -std::sin(a.theta1 - a.theta3) / root;
  if (std::abs(cos_eta * cos_eta + sin_eta * sin_eta - 1.0) > 1e-12 ||
      std::abs(cos_beta * cos_beta + sin_beta * sin_beta - 1.0) > 1e-12) {
    throw NumericalError("eta_beta_from: chart is not on the unit circle");
  }
  return {std::atan2(sin_eta, cos_eta), std::atan2(sin_beta, cos_beta), a.phi};
}

ComplexMatrix r123_factorized(const ThreeBodyAngles& a) {
  const double chi = 2.0 * a.phi;
  return embed(rmat(a.theta1, chi), 1, 3) * embed(rmat(a.theta2(), chi), 2, 3) *
         embed(rmat(a.theta3, chi), 1, 3);
}

ComplexMatrix r123_factorized_reversed(const ThreeBodyAngles& a) {
  const double chi = 2.0 * a.phi;
  return embed(rmat(a.theta3, chi), 2, 3) * embed(rmat(a.theta2(), chi), 1, 3) *
         embed(rmat(a.theta1, chi), 2, 3);
}

std::array<ComplexMatrix, 3> phased_paulis(double phi) {
  const Complex e = std::polar(1.0, phi);
  ComplexMatrix s1(2, 2), s2(2, 2);
  s1 << 0, e, std::conj(e), 0;
  s2 << 0, -kI * e, kI * std::conj(e), 0;
  return {s1, s2, pauli_z()};
}

SigmaTriple sigma_algebra(double phi) {
  const auto [s1, s2, s3] = phased_paulis(phi);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {{kron(s2, s1, id), kron(id, s2, s1), kron(s2, s3, s1)}};
}

double sigma_commutator_residual(const SigmaTriple& s) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const ComplexMatrix c = s.sigma[i] * s.sigma[j] - s.sigma[j] * s.sigma[i];
    worst = std::max(worst, (c - 2.0 * kI * s.sigma[k]).norm());
  }
  return worst;
}

ComplexMatrix r123_exponential(const EtaBeta& eb) {
  const ComplexMatrix g = sigma_algebra(eb.phi).dot(rotation_axis(eb.beta));
  return std::cos(eb.eta) * ComplexMatrix::Identity(8, 8) + kI * std::sin(eb.eta) * g;
}

StateSet8 generate_states(const EtaBeta& eb) {
  const ComplexMatrix r = r123_exponential(eb);
  StateSet8 out;
  for (int j = 0; j < 8; ++j) out[j] = r.col(j);
  return out;
}

ComplexVector hadamard3(const ComplexVector& state) {
  if (state.size() != 8) throw InputError("hadamard3: state must have dimension 8");
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  return kron(h, h, h) * state;
}

StateSet8 ghz_basis() {
  StateSet8 out;
  int k = 0;
  for (int idx = 0; idx < 4; ++idx) {
    for (int sign : {1, -1}) {
      ComplexVector v = ComplexVector::Zero(8);
      v(idx) = 1.0 / std::sqrt(2.0);
      v(7 - idx) = sign / std::sqrt(2.0);
      out[k++] = v;
    }
  }
  return out;
}

EtaBeta ghz_point() {
  return {M_PI / 3.0, std::atan2(-std::sqrt(3.0) / 3.0, -std::sqrt(6.0) / 3.0), 0.0};
}

EtaBeta w_point() {
  return {M_PI / 2.0, std::atan2(-std::sqrt(3.0) / 3.0, -std::sqrt(6.0) / 3.0), 0.0};
}

}  // namespace ybe
