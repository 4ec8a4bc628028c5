#pragma once

// Gauge-potential Hamiltonians i hbar (dU/dt) U^dagger for unitary paths
// driven by a uniformly rotating phase.

#include <array>
#include <functional>

#include <Eigen/Core>

#include "ybe/linalg.hpp"
#include "ybe/threebody.hpp"

namespace ybe {

struct DriveParams {
  double eta = 0.0;
  double beta = 0.0;
  double phi_rate = 1.0;
  double hbar = 1.0;
};

enum class Band { Plus, Minus };

/// Finite-difference i hbar (dU/dt) U^dagger with a central step h.
ComplexMatrix gauge_potential(const std::function<ComplexMatrix(double)>& path, double t,
                              double h = 1e-6, double hbar = 1.0);

// Two-body

/// -hbar chi_rate sin(theta) [ (sin(theta)/2)(S3 I + I S3)
///   + cos(theta)(e^{i chi} S+S+ + e^{-i chi} S-S-) ].
ComplexMatrix h2_local(double theta, double chi, double chi_rate = 1.0, double hbar = 1.0);

struct TwoBodyEigenpair {
  double energy = 0.0;
  ComplexVector state;
};

/// Nonzero levels: E+ = -hbar chi_rate sin(theta) with
/// cos(pi/4 - theta/2)|00> + sin(pi/4 - theta/2) e^{-i chi}|11>, and E- = -E+.
std::array<TwoBodyEigenpair, 2> h2_eigenpairs(double theta, double chi, double chi_rate = 1.0,
                                              double hbar = 1.0);

/// Pauli-normalised operators on span{|00>, |11>}, zero elsewhere.
std::array<ComplexMatrix, 3> bispin_operators();

/// Axis n with h2 = -hbar chi_rate sin(theta) n.S on the bispin subspace.
Eigen::Vector3d bispin_axis(double theta, double chi);

/// Loop phase of the E+ two-body state over chi in [0, 2 pi].
double berry_phase_2body(double theta, int steps);

// Three-body

/// Five-term operator, scaled by hbar * phi_rate.
ComplexMatrix h3_local(const DriveParams& dp, double phi);

/// Closed-form eigenvectors |a1>..|a8>: a1..a4 at 0, a5/a6 at +2 sin(eta),
/// a7/a8 at -2 sin(eta) (times hbar phi_rate).
StateSet8 eigenstates3(double eta, double beta, double phi);

struct SpectrumReport {
  RealVector eigenvalues;
  double e_zero = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  std::array<int, 3> multiplicity{};  // zero, plus, minus
  double max_level_error = 0.0;
  bool degenerate = false;
  std::array<double, 3> projector_distance{};  // NaN when degenerate
};

SpectrumReport eigenbasis3(const DriveParams& dp, double phi);

/// Discrete Wilson-loop phase -sum arg<psi_k|psi_k+1> of a closed-form
/// eigenstate over phi in [0, pi]. Both members of the band are evaluated
/// and must agree; steps and steps/2 must agree within 1e-5.
double berry_phase(const DriveParams& dp, Band band, int steps);

/// Same loop for a single closed-form state index 1..8.
double berry_phase_state(double eta, double beta, int index, int steps);

/// |<a_i| d/dphi a_j>| between the two members of a band, by central differences.
double offdiagonal_connection(double eta, double beta, double phi, Band band);

}  // namespace ybe
