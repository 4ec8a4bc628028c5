#include "ybe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ybe {

namespace {

constexpr double kNormTol = 1e-10;

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InputError(std::string(who) + ": matrix must be square and non-empty");
  }
}

// Bit position (from the least significant end) of 1-based site s in an
// n-qubit index.
inline int bit_of(int site, int n) { return n - site; }

}  // namespace

int qubit_count(Eigen::Index dim) {
  if (dim < 1) return -1;
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return (Eigen::Index{1} << n) == dim ? n : -1;
}

ComplexMatrix embed(const ComplexMatrix& op, int first_site, int n_sites) {
  require_square(op, "embed");
  const int k = qubit_count(op.rows());
  if (k < 0) throw InputError("embed: operator dimension is not a power of two");
  if (n_sites < 1 || n_sites > kMaxDenseSites) throw InputError("embed: site count out of range");
  if (first_site < 1 || first_site + k - 1 > n_sites) {
    throw InputError("embed: operator does not fit on the chain");
  }
  const Eigen::Index left = Eigen::Index{1} << (first_site - 1);
  const Eigen::Index right = Eigen::Index{1} << (n_sites - first_site - k + 1);
  return kron(kron(ComplexMatrix::Identity(left, left), op),
              ComplexMatrix::Identity(right, right));
}

void accumulate_local(ComplexMatrix& target, const ComplexMatrix& op,
                      std::span<const int> sites, int n_sites) {
  require_square(op, "accumulate_local");
  const int k = static_cast<int>(sites.size());
  if (qubit_count(op.rows()) != k) {
    throw InputError("accumulate_local: operator dimension does not match site count");
  }
  if (n_sites < 1 || n_sites > kMaxDenseSites) {
    throw InputError("accumulate_local: site count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (target.rows() != dim || target.cols() != dim) {
    throw InputError("accumulate_local: target has the wrong dimension");
  }
  Eigen::Index mask = 0;
  for (int i = 0; i < k; ++i) {
    const int s = sites[i];
    if (s < 1 || s > n_sites) throw InputError("accumulate_local: site out of range");
    const Eigen::Index bit = Eigen::Index{1} << bit_of(s, n_sites);
    if (mask & bit) throw InputError("accumulate_local: repeated site");
    mask |= bit;
  }

  // Nonzero pattern of op, column-wise.
  std::vector<std::vector<std::pair<int, Complex>>> entries(op.cols());
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if (op(r, c) != Complex{0.0, 0.0}) entries[c].emplace_back(static_cast<int>(r), op(r, c));
    }
  }

  auto scatter = [&](Eigen::Index rest, int local) {
    Eigen::Index idx = rest;
    for (int i = 0; i < k; ++i) {
      if ((local >> (k - 1 - i)) & 1) idx |= Eigen::Index{1} << bit_of(sites[i], n_sites);
    }
    return idx;
  };

  for (Eigen::Index col = 0; col < dim; ++col) {
    int local = 0;
    for (int i = 0; i < k; ++i) {
      local = (local << 1) | static_cast<int>((col >> bit_of(sites[i], n_sites)) & 1);
    }
    const Eigen::Index rest = col & ~mask;
    for (const auto& [r, v] : entries[local]) target(scatter(rest, r), col) += v;
  }
}

ComplexMatrix embed_sites(const ComplexMatrix& op, std::span<const int> sites, int n_sites) {
  if (n_sites < 1 || n_sites > kMaxDenseSites) throw InputError("embed_sites: site count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  accumulate_local(out, op, sites, n_sites);
  return out;
}

CheckResult check_unitary(const ComplexMatrix& a, double tol) {
  require_square(a, "check_unitary");
  const double r =
      (a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols())).norm();
  return {r <= tol, r};
}

CheckResult check_hermitian(const ComplexMatrix& a, double tol) {
  require_square(a, "check_hermitian");
  const double r = (a - a.adjoint()).norm();
  return {r <= tol, r};
}

HermEigResult herm_eig(const ComplexMatrix& h, double tol) {
  require_square(h, "herm_eig");
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > tol * scale) throw InputError("herm_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("herm_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix matexp_skew(const ComplexMatrix& g, double t, double tol) {
  require_square(g, "matexp_skew");
  if ((g + g.adjoint()).norm() > tol * g.norm()) {
    throw InputError("matexp_skew: generator is not anti-Hermitian");
  }
  // exp(tG) = exp(-i t (iG))
  const ComplexMatrix h = kI * g;
  const auto eig = herm_eig(0.5 * (h + h.adjoint()), tol);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(-kI * (t * eig.eigenvalues(i)));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix partial_trace(const ComplexVector& state, std::span<const int> keep, double tol) {
  const int n = qubit_count(state.size());
  if (n < 1) throw InputError("partial_trace: state dimension is not a power of two");
  if (std::abs(state.squaredNorm() - 1.0) > std::max(tol, kNormTol)) {
    throw InputError("partial_trace: state is not normalized");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 1 || kept.back() > n) {
    throw InputError("partial_trace: invalid keep set");
  }
  std::vector<int> traced;
  for (int s = 1; s <= n; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  // psi as a (kept x traced) matrix, then rho = M M^dagger.
  ComplexMatrix m = ComplexMatrix::Zero(Eigen::Index{1} << nk, Eigen::Index{1} << nt);
  for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    for (int s : kept) r = (r << 1) | ((idx >> bit_of(s, n)) & 1);
    for (int s : traced) c = (c << 1) | ((idx >> bit_of(s, n)) & 1);
    m(r, c) = state(idx);
  }
  return m * m.adjoint();
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix spin_plus() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  return m;
}

ComplexMatrix spin_minus() { return spin_plus().transpose(); }

ComplexMatrix spin_z() { return pauli_z(); }

ComplexVector basis_ket(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxDenseSites)) {
    throw InputError("basis_ket: bad bit string length");
  }
  Eigen::Index idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InputError("basis_ket: bit string must be 0/1");
    idx = (idx << 1) | (ch == '1' ? 1 : 0);
  }
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << bits.size());
  v(idx) = 1.0;
  return v;
}

ComplexMatrix span_projector(const ComplexMatrix& basis) {
  Eigen::HouseholderQR<ComplexMatrix> qr(basis);
  const ComplexMatrix q =
      qr.householderQ() * ComplexMatrix::Identity(basis.rows(), basis.cols());
  return q * q.adjoint();
}

double distance_up_to_phase(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw InputError("distance_up_to_phase: size mismatch");
  const double overlap = std::abs(b.dot(a));
  return std::sqrt(std::max(0.0, a.squaredNorm() + b.squaredNorm() - 2.0 * overlap));
}

}  // namespace ybe
