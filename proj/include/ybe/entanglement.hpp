#pragma once

// Squared concurrences are on the scale where a maximally entangled
// one-vs-two split gives 1/4.

#include <string_view>

#include "ybe/linalg.hpp"
#include "ybe/threebody.hpp"

namespace ybe {

struct ConcurrenceTriple {
  double c1_23_sq = 0.0;
  double c2_13_sq = 0.0;
  double c3_12_sq = 0.0;

  double max_abs_diff(const ConcurrenceTriple& o) const;
};

struct PolytopeCoords {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  /// lambda_k <= sum of the other two, for every k.
  bool inside(double tol = kAlgebraTol) const;
};

enum class EntanglementTag { FullySeparable, Biseparable, Genuine };

struct EntanglementClass {
  EntanglementTag tag = EntanglementTag::FullySeparable;
  int zero_count = 3;
};

std::string_view to_string(EntanglementTag tag);

/// (sum |a0|^2)(sum |a1|^2) - |sum a0 a1*|^2 for each single-qubit split,
/// where a0/a1 are the amplitudes with that qubit in |0>/|1>. Each value is
/// cross-checked against (1 - tr rho^2)/2 of the one-qubit marginal.
ConcurrenceTriple concurrence3(const ComplexVector& state);

/// Single split, no cross-check. `qubit` is 1-based.
double split_concurrence_sq(const ComplexVector& state, int qubit);

/// (1 - tr rho_q^2)/2 from the reduced density matrix.
double marginal_concurrence_sq(const ComplexVector& state, int qubit);

/// Closed form shared by all eight columns of R123(eta, beta).
ConcurrenceTriple concurrence_closed(const EtaBeta& eb);

struct ThetaConcurrence {
  ConcurrenceTriple triple;
  double sin2theta2 = 0.0;
};

/// In terms of s_i = sin(2 theta_i), with s2 = (s1 + s3)/(1 + s1 s3).
ThetaConcurrence concurrence_from_sin2(double s1, double s3);
ThetaConcurrence concurrence_from_thetas(double theta1, double theta3);

PolytopeCoords polytope_lambdas(const ComplexVector& state);

EntanglementClass classify(const ConcurrenceTriple& t, double tol = 1e-9);

/// Two-qubit pure-state concurrence 2|a00 a11 - a01 a10|.
double pure_concurrence2(const ComplexVector& state);

/// Wootters concurrence of a two-qubit density matrix.
double wootters2(const ComplexMatrix& rho, double tol = 1e-10);

}  // namespace ybe
