#pragma once

// Three-body S-matrix R123 on three qubits, in the factorized
// R12 R23 R12 form and the exponential form exp(i eta n.Sigma).
// `phi` here is the single-qubit phase; two-body factors carry chi = 2 phi.

#include <array>

#include <Eigen/Core>

#include "ybe/linalg.hpp"

namespace ybe {

struct ThreeBodyAngles {
  double theta1 = 0.0;
  double theta3 = 0.0;
  double phi = 0.0;

  double theta2() const;
};

struct EtaBeta {
  double eta = 0.0;
  double beta = 0.0;
  double phi = 0.0;
};

struct SigmaTriple {
  std::array<ComplexMatrix, 3> sigma;

  /// n.Sigma for a real 3-vector n.
  ComplexMatrix dot(const Eigen::Vector3d& n) const;
};

using StateSet8 = std::array<ComplexVector, 8>;

/// (cos beta / sqrt2, cos beta / sqrt2, sin beta).
Eigen::Vector3d rotation_axis(double beta);

EtaBeta eta_beta_from(const ThreeBodyAngles& angles);

ComplexMatrix r123_factorized(const ThreeBodyAngles& angles);

/// R23(theta3) R12(theta2) R23(theta1); equal to the factorized form.
ComplexMatrix r123_factorized_reversed(const ThreeBodyAngles& angles);

ComplexMatrix r123_exponential(const EtaBeta& eb);

/// Columns of R123, i.e. R123 applied to |000>, ..., |111>.
StateSet8 generate_states(const EtaBeta& eb);

/// Single-qubit phase matrices: s1 = [[0,e^{i phi}],[e^{-i phi},0]],
/// s2 = [[0,-i e^{i phi}],[i e^{-i phi},0]], s3 = diag(1,-1).
std::array<ComplexMatrix, 3> phased_paulis(double phi);

/// Sigma1 = s2 (x) s1 (x) I, Sigma2 = I (x) s2 (x) s1, Sigma3 = s2 (x) s3 (x) s1.
SigmaTriple sigma_algebra(double phi);

/// Largest residual of [S_i, S_j] = 2i eps_ijk S_k over the three pairs.
double sigma_commutator_residual(const SigmaTriple& s);

ComplexVector hadamard3(const ComplexVector& state);

/// (|abc> +- |~a~b~c>)/sqrt2 for the eight sign/bit choices.
StateSet8 ghz_basis();

EtaBeta ghz_point();
EtaBeta w_point();

}  // namespace ybe
