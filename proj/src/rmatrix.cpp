#include "ybe/rmatrix.hpp"

#include <cmath>

namespace ybe {

ComplexMatrix braid_b(double chi) { return rmat(M_PI / 4.0, chi); }

ComplexMatrix rmat(double theta, double chi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e = std::polar(1.0, chi);
  ComplexMatrix r = ComplexMatrix::Zero(4, 4);
  r(0, 0) = c;
  r(0, 3) = s * e;
  r(1, 1) = c;
  r(1, 2) = s;
  r(2, 1) = -s;
  r(2, 2) = c;
  r(3, 0) = -s * std::conj(e);
  r(3, 3) = c;
  return r;
}

ComplexMatrix rmat_generator() {
  return -kron(pauli_y(), pauli_x());
}

std::array<ComplexVector, 4> two_qubit_states(double theta, double chi) {
  const ComplexMatrix r = rmat(theta, chi);
  return {r.col(0), r.col(1), r.col(2), r.col(3)};
}

YbeResidual ybe_residual(double theta1, double theta2, double theta3, double chi, double tol) {
  auto r12 = [&](double t) { return embed(rmat(t, chi), 1, 3); };
  auto r23 = [&](double t) { return embed(rmat(t, chi), 2, 3); };
  const ComplexMatrix lhs = r12(theta1) * r23(theta2) * r12(theta3);
  const ComplexMatrix rhs = r23(theta3) * r12(theta2) * r23(theta1);
  const double norm = (lhs - rhs).norm();
  return {norm, norm <= tol};
}

LorentzSum lorentz_add(double theta1, double theta3) {
  const double num = std::sin(theta1 + theta3);
  const double den = std::cos(theta1 - theta3);
  return {std::atan2(num, den), std::abs(den) <= 1e-14};
}

double braid_relation_residual(const ComplexMatrix& b) {
  const ComplexMatrix b1 = embed(b, 1, 3);
  const ComplexMatrix b2 = embed(b, 2, 3);
  return (b1 * b2 * b1 - b2 * b1 * b2).norm();
}

}  // namespace ybe
