#pragma once

// Two-qubit braid and R-matrices. `chi` is the literal phase carried by the
// corner entries e^{+-i chi}.

#include <array>

#include "ybe/linalg.hpp"

namespace ybe {

struct TwoBodyAngles {
  double theta = 0.0;
  double chi = 0.0;
};

struct YbeResidual {
  double lhs_rhs_norm = 0.0;
  bool satisfied = false;
};

struct LorentzSum {
  double theta2 = 0.0;
  bool pole = false;  // cos(theta1 - theta3) vanishes
};

/// (1/sqrt2)(I + M) with M^2 = -I.
ComplexMatrix braid_b(double chi);

/// [[c,0,0,s e^{i chi}],[0,c,s,0],[0,-s,c,0],[-s e^{-i chi},0,0,c]].
ComplexMatrix rmat(double theta, double chi);
inline ComplexMatrix rmat(const TwoBodyAngles& a) { return rmat(a.theta, a.chi); }

/// Generator C with rmat(theta, 0) = exp(-i theta C).
ComplexMatrix rmat_generator();

/// Columns R|00>, R|01>, R|10>, R|11>.
std::array<ComplexVector, 4> two_qubit_states(double theta, double chi);

/// || R12(t1) R23(t2) R12(t3) - R23(t3) R12(t2) R23(t1) ||_F on three qubits.
YbeResidual ybe_residual(double theta1, double theta2, double theta3, double chi,
                         double tol = kAlgebraTol);

/// Spectral parameter of the middle factor:
/// theta2 = atan2(sin(theta1 + theta3), cos(theta1 - theta3)).
LorentzSum lorentz_add(double theta1, double theta3);

/// Residual of the braid relation B1 B2 B1 = B2 B1 B2 on three qubits.
double braid_relation_residual(const ComplexMatrix& b);

}  // namespace ybe
