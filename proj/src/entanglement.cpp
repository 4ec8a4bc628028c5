#include "ybe/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ybe {

namespace {

constexpr double kCrossCheckTol = 1e-10;

void require_state8(const ComplexVector& s, const char* who) {
  if (s.size() != 8) throw InputError(std::string(who) + ": expected a 3-qubit state");
  if (std::abs(s.squaredNorm() - 1.0) > 1e-10) {
    throw InputError(std::string(who) + ": state is not normalized");
  }
}

}  // namespace

double ConcurrenceTriple::max_abs_diff(const ConcurrenceTriple& o) const {
  return std::max({std::abs(c1_23_sq - o.c1_23_sq), std::abs(c2_13_sq - o.c2_13_sq),
                   std::abs(c3_12_sq - o.c3_12_sq)});
}

bool PolytopeCoords::inside(double tol) const {
  return lambda1 <= lambda2 + lambda3 + tol && lambda2 <= lambda1 + lambda3 + tol &&
         lambda3 <= lambda1 + lambda2 + tol;
}

std::string_view to_string(EntanglementTag tag) {
  switch (tag) {
    case EntanglementTag::FullySeparable: return "fully-separable";
    case EntanglementTag::Biseparable: return "biseparable";
    case EntanglementTag::Genuine: return "genuine";
  }
  return "unknown";
}

double split_concurrence_sq(const ComplexVector& state, int qubit) {
  if (qubit < 1 || qubit > 3) throw InputError("split_concurrence_sq: qubit must be 1..3");
  const int bit = 3 - qubit;
  std::array<Complex, 4> a0{}, a1{};
  int i0 = 0, i1 = 0;
  for (int idx = 0; idx < 8; ++idx) {
    if ((idx >> bit) & 1) {
      a1[i1++] = state(idx);
    } else {
      a0[i0++] = state(idx);
    }
  }
  double n0 = 0.0, n1 = 0.0;
  Complex cross{0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    n0 += std::norm(a0[k]);
    n1 += std::norm(a1[k]);
    cross += a0[k] * std::conj(a1[k]);
  }
  return n0 * n1 - std::norm(cross);
}

double marginal_concurrence_sq(const ComplexVector& state, int qubit) {
  const int keep[] = {qubit};
  const ComplexMatrix rho = partial_trace(state, keep);
  const double purity = (rho * rho).trace().real();
  return 0.5 * (1.0 - purity);
}

ConcurrenceTriple concurrence3(const ComplexVector& state) {
  require_state8(state, "concurrence3");
  ConcurrenceTriple t{split_concurrence_sq(state, 1), split_concurrence_sq(state, 2),
                      split_concurrence_sq(state, 3)};
  const ConcurrenceTriple check{marginal_concurrence_sq(state, 1),
                                marginal_concurrence_sq(state, 2),
                                marginal_concurrence_sq(state, 3)};
  if (t.max_abs_diff(check) > kCrossCheckTol) {
    throw NumericalError("concurrence3: closed form disagrees with reduced density matrix");
  }
  return t;
}

ConcurrenceTriple concurrence_closed(const EtaBeta& eb) {
  const double ce2 = std::pow(std::cos(eb.eta), 2);
  const double se2 = std::pow(std::sin(eb.eta), 2);
  const double cb2 = std::pow(std::cos(eb.beta), 2);
  const double sb2 = std::pow(std::sin(eb.beta), 2);
  const double outer = (ce2 + 0.5 * cb2 * se2) * (0.5 * cb2 * se2 + sb2 * se2);
  const double middle = (ce2 + sb2 * se2) * (cb2 * se2);
  return {outer, middle, outer};
}

ThetaConcurrence concurrence_from_sin2(double s1, double s3) {
  const double den = 1.0 + s1 * s3;
  if (std::abs(den) < 1e-15) throw InputError("concurrence_from_sin2: 1 + s1 s3 vanishes");
  const double s2 = (s1 + s3) / den;
  const double outer = 0.25 * s2 * s2;
  const double middle = 0.25 - 0.25 * std::pow(s2 * (s1 + s3) - 1.0, 2);
  return {{outer, middle, outer}, s2};
}

ThetaConcurrence concurrence_from_thetas(double theta1, double theta3) {
  return concurrence_from_sin2(std::sin(2.0 * theta1), std::sin(2.0 * theta3));
}

PolytopeCoords polytope_lambdas(const ComplexVector& state) {
  require_state8(state, "polytope_lambdas");
  std::array<double, 3> lam{};
  for (int q = 1; q <= 3; ++q) {
    const int keep[] = {q};
    lam[q - 1] = herm_eig(partial_trace(state, keep)).eigenvalues(0);
  }
  PolytopeCoords p{lam[0], lam[1], lam[2]};
  if (!p.inside(1e-12)) throw NumericalError("polytope_lambdas: outside the polytope");
  return p;
}

EntanglementClass classify(const ConcurrenceTriple& t, double tol) {
  const int zeros = (t.c1_23_sq <= tol) + (t.c2_13_sq <= tol) + (t.c3_12_sq <= tol);
  EntanglementTag tag = EntanglementTag::Genuine;
  if (zeros == 3) {
    tag = EntanglementTag::FullySeparable;
  } else if (zeros >= 1) {
    tag = EntanglementTag::Biseparable;
  }
  return {tag, zeros};
}

double pure_concurrence2(const ComplexVector& s) {
  if (s.size() != 4) throw InputError("pure_concurrence2: expected a 2-qubit state");
  return 2.0 * std::abs(s(0) * s(3) - s(1) * s(2));
}

double wootters2(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InputError("wootters2: expected a 4x4 matrix");
  if ((rho - rho.adjoint()).norm() > tol) throw InputError("wootters2: not Hermitian");
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol) throw InputError("wootters2: trace is not 1");
  const auto eig = herm_eig(rho, tol);
  if (eig.eigenvalues(0) < -tol) throw InputError("wootters2: not positive semidefinite");

  // rho = W W^dagger; the lambdas are the singular values of W^T (Y x Y) W
  ComplexMatrix w = eig.eigenvectors;
  for (int i = 0; i < 4; ++i) {
    const double d = eig.eigenvalues(i);
    w.col(i) *= d > 1e-14 ? std::sqrt(d) : 0.0;
  }
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const Eigen::JacobiSVD<ComplexMatrix> svd(w.transpose() * yy * w);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[i] = svd.singularValues()(i);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace ybe
