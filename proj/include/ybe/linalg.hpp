#pragma once

// Dense complex kernel shared by every other module.
//
// Basis convention: qubit 1 is the leftmost tensor factor and the most
// significant bit of the basis index, so |klm> sits at index 0bklm.
// |0> is spin up, |1> is spin down.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ybe/error.hpp"

namespace ybe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

// Largest chain handled by the dense paths (4096 x 4096).
inline constexpr int kMaxDenseSites = 12;

/// Kronecker product in block layout, A-index major.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "kron operands must share a scalar type");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename DerivedA, typename DerivedB, typename DerivedC>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
          const Eigen::MatrixBase<DerivedC>& c) {
  return kron(kron(a, b), c);
}

/// Acts with `op` on consecutive sites [first_site, first_site + k), 1-based,
/// identity elsewhere. `op` must be 2^k x 2^k.
ComplexMatrix embed(const ComplexMatrix& op, int first_site, int n_sites);

/// Like embed, for an arbitrary ordered list of distinct 1-based sites. The
/// first listed site is the most significant factor of `op`. Used for
/// operators that wrap around a periodic chain.
ComplexMatrix embed_sites(const ComplexMatrix& op, std::span<const int> sites,
                          int n_sites);

/// Adds `op` placed on `sites` into `target` without forming the full
/// embedded matrix. Cost is O(2^n * nnz(op)).
void accumulate_local(ComplexMatrix& target, const ComplexMatrix& op,
                      std::span<const int> sites, int n_sites);

/// exp(t G) for anti-Hermitian G, through the eigendecomposition of iG.
ComplexMatrix matexp_skew(const ComplexMatrix& g, double t, double tol = kAlgebraTol);

struct HermEigResult {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns
};

HermEigResult herm_eig(const ComplexMatrix& h, double tol = kAlgebraTol);

/// Reduced density matrix of an n-qubit pure state on the 1-based `keep`
/// sites, ordered as listed in `keep` after sorting.
ComplexMatrix partial_trace(const ComplexVector& state, std::span<const int> keep,
                            double tol = kAlgebraTol);

struct CheckResult {
  bool ok = false;
  double residual = 0.0;
};

CheckResult check_unitary(const ComplexMatrix& a, double tol = kAlgebraTol);
CheckResult check_hermitian(const ComplexMatrix& a, double tol = kAlgebraTol);

// Pauli matrices and the spin operators used throughout: S3 = diag(1,-1),
// S+ = |0><1| raises a down spin.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix spin_plus();
ComplexMatrix spin_minus();
ComplexMatrix spin_z();

/// Computational basis ket from a bit string such as "011".
ComplexVector basis_ket(std::string_view bits);

/// Number of qubits n with dim == 2^n, or -1.
int qubit_count(Eigen::Index dim);

/// Projector onto span of the columns of `basis`, orthonormalised first.
ComplexMatrix span_projector(const ComplexMatrix& basis);

/// min over unit phases of |a - e^{i p} b|.
double distance_up_to_phase(const ComplexVector& a, const ComplexVector& b);

}  // namespace ybe
