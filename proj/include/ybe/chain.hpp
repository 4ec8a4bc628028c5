#pragma once

// Homogeneous chain of three-site gauge-potential terms, its Jordan-Wigner
// fermion form, the Kitaev-type coefficients and the end-mode analysis.
// Energies are in units of hbar * phi_rate.
//
// Jordan-Wigner convention: a spin-up site is an occupied fermion, the
// vacuum is |down ... down>, a+_j = prod_{l<j} (-S3_l) S+_j.

#include <array>
#include <iosfwd>
#include <vector>

#include "ybe/linalg.hpp"

namespace ybe {

enum class Boundary { Open, Periodic };

struct ChainSpec {
  int n_sites = 3;
  double eta = 0.0;
  double beta = 0.0;
  double phi = 0.0;
  Boundary boundary = Boundary::Open;
};

struct KitaevParams {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

/// Quadratic fermion form
///   H = sum_ij hopping_ij a+_i a_j + (1/2) sum_ij (pairing_ij a+_i a+_j + h.c.) + constant
/// with `pairing` antisymmetric. For a periodic chain the wrap-around terms
/// carry the sign valid in the one-particle sector.
struct FermionTable {
  int n_sites = 0;
  ComplexMatrix hopping;
  ComplexMatrix pairing;
  double constant = 0.0;
};

struct BandEnergies {
  double plus = 0.0;
  double minus = 0.0;
};

struct ZeroModeReport {
  std::array<Complex, 3> roots{};
  std::array<double, 3> moduli{};
  int inside_count = 0;
  int boundary_rank = 0;
  double smallest_singular = 0.0;
  bool unpaired_mf = false;
  bool gap_closed = false;
};

struct Fig1Row {
  double beta = 0.0;
  std::array<double, 3> abs_x{};
};

ComplexMatrix spin_chain_matrix(const ChainSpec& spec);

/// Indices of the basis states with exactly one spin up, ordered by site.
std::vector<Eigen::Index> one_magnon_indices(int n_sites);

/// Block of a chain operator on the one-magnon states.
ComplexMatrix one_magnon_block(const ComplexMatrix& h, int n_sites);

KitaevParams kitaev_params(double eta, double beta);

FermionTable fermion_quadratic(const ChainSpec& spec);

/// hopping + constant: the Hamiltonian on one-fermion states.
ComplexMatrix one_particle_block(const FermionTable& t);

/// [[h, D], [D^dagger, -h^T]]; eigenvalues come in +- pairs.
ComplexMatrix bdg_matrix(const FermionTable& t);

/// Closed-form band energies +- sqrt(X_k^2/4 + |Y_k|^2).
BandEnergies band_spectrum(double eta, double beta, double k, double phi = 0.0);

/// (1/2)[[xi_k, Delta_k], [Delta_k*, -xi_k]] from the bulk row of the fermion table.
ComplexMatrix momentum_block(double eta, double beta, double phi, double k);

/// eta with omega2 = delta2 at the given beta: tan(eta) = -2 sin(beta)/cos^2(beta).
double eta_for_omega2_eq_delta2(double beta);

/// Real antisymmetric A with H = (i/4) sum A_lm c_l c_m, open chain,
/// c_{2j-1} = a_j + a+_j, c_{2j} = i(a+_j - a_j). Requires omega2 = delta2.
RealMatrix majorana_matrix(const ChainSpec& spec);

/// Roots of (2b^2+1)x^3 - 2sqrt2(b^3+b)x^2 + (2b^2-1)x + sqrt2 b, b = tan(beta),
/// ascending modulus.
std::array<Complex, 3> zero_mode_cubic(double beta);

ZeroModeReport boundary_nullspace(double beta, const std::array<Complex, 3>& roots);

/// Kitaev-type conditions 2|omega| > |mu| for the three sub-chains.
std::array<bool, 3> mf_inequalities(double eta, double beta);

std::vector<Fig1Row> fig1_data(const std::vector<double>& beta_grid);
void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows);

}  // namespace ybe
