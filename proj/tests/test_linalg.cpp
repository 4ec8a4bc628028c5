#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "ybe/linalg.hpp"
#include "ybe/polynomial.hpp"
#include "ybe/rmatrix.hpp"

using namespace ybe;
using testing::uniform;

TEST_CASE("kron of identities is identity") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("kron of sigma_y and sigma_x gives the antidiagonal pattern") {
  const ComplexMatrix k = kron(pauli_y(), pauli_x());
  const Complex expected[] = {-kI, -kI, kI, kI};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(k(i, 3 - i) - expected[i]) == 0.0);
  }
  CHECK((k.cwiseAbs().sum()) == doctest::Approx(4.0));
  const double th = 0.37;
  const ComplexMatrix r = std::cos(th) * ComplexMatrix::Identity(4, 4) + kI * std::sin(th) * k;
  CHECK((r - rmat(th, 0.0)).norm() < 1e-15);
}

TEST_CASE("kron spectrum is the product spectrum") {
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(2);
    const ComplexMatrix b = testing::random_hermitian(2);
    const RealVector la = herm_eig(a).eigenvalues;
    const RealVector lb = herm_eig(b).eigenvalues;
    std::vector<double> prod;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) prod.push_back(la(i) * lb(j));
    std::sort(prod.begin(), prod.end());
    const RealVector lk = herm_eig(kron(a, b)).eigenvalues;
    for (int i = 0; i < 4; ++i) CHECK(lk(i) == doctest::Approx(prod[i]).epsilon(1e-12));
  }
}

TEST_CASE("kron is associative entrywise") {
  const ComplexMatrix a = testing::random_matrix(2);
  const ComplexMatrix b = testing::random_matrix(2);
  const ComplexMatrix c = testing::random_matrix(2);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("embed") {
  SUBCASE("identity stays identity") {
    CHECK((embed(ComplexMatrix::Identity(4, 4), 1, 3) - ComplexMatrix::Identity(8, 8)).norm() == 0.0);
  }
  SUBCASE("S3 on the middle site follows the middle bit") {
    const ComplexMatrix e = embed(pauli_z(), 2, 3);
    const double expected[] = {1, 1, -1, -1, 1, 1, -1, -1};
    for (int k = 0; k < 8; ++k) CHECK(e(k, k).real() == expected[k]);
    CHECK((e - ComplexMatrix(e.diagonal().asDiagonal())).norm() == 0.0);
  }
  SUBCASE("braid relation") {
    CHECK(braid_relation_residual(braid_b(0.0)) <= 1e-12);
  }
  SUBCASE("disjoint supports commute") {
    const ComplexMatrix x = testing::random_matrix(4);
    const ComplexMatrix y = testing::random_matrix(4);
    const ComplexMatrix ex = embed(x, 1, 5);
    const ComplexMatrix ey = embed(y, 3, 5);
    CHECK((ex * ey - ey * ex).norm() <= 1e-13);
  }
  SUBCASE("bad placements are rejected") {
    CHECK_THROWS_AS(embed(ComplexMatrix::Identity(4, 4), 3, 3), InputError);
    CHECK_THROWS_AS(embed(ComplexMatrix::Identity(3, 3), 1, 3), InputError);
    CHECK_THROWS_AS(embed(ComplexMatrix::Identity(2, 2), 0, 3), InputError);
  }
}

TEST_CASE("embed_sites agrees with embed and handles wrap-around") {
  const ComplexMatrix op = testing::random_matrix(8);
  const int consecutive[] = {2, 3, 4};
  CHECK((embed_sites(op, consecutive, 5) - embed(op, 2, 5)).norm() < 1e-14);

  // Sites (4,1) in that order equal a swap-conjugated embed on (1,4).
  const ComplexMatrix two = testing::random_matrix(4);
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  const int forward[] = {1, 4};
  const int backward[] = {4, 1};
  CHECK((embed_sites(two, backward, 4) - embed_sites(swap * two * swap, forward, 4)).norm() < 1e-14);

  const int repeated[] = {1, 1};
  CHECK_THROWS_AS(embed_sites(two, repeated, 3), InputError);
}

TEST_CASE("matexp_skew") {
  SUBCASE("zero generator") {
    CHECK((matexp_skew(ComplexMatrix::Zero(4, 4), 1.3) - ComplexMatrix::Identity(4, 4)).norm() < 1e-15);
  }
  SUBCASE("one-parameter group and unitarity") {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix g = kI * testing::random_hermitian(6);
      const double s = uniform(-2, 2), t = uniform(-2, 2);
      const ComplexMatrix us = matexp_skew(g, s);
      CHECK((us * matexp_skew(g, t) - matexp_skew(g, s + t)).norm() <= 1e-12);
      CHECK(check_unitary(us).ok);
    }
  }
  SUBCASE("involutive generator gives cos + i sin") {
    const ComplexMatrix n = kron(pauli_x(), pauli_z());
    const double eta = 0.81;
    const ComplexMatrix expected =
        std::cos(eta) * ComplexMatrix::Identity(4, 4) + kI * std::sin(eta) * n;
    CHECK((matexp_skew(kI * n, eta) - expected).norm() <= 1e-12);
  }
  SUBCASE("Hermitian generator is rejected") {
    CHECK_THROWS_AS(matexp_skew(pauli_x(), 1.0), InputError);
  }
}

TEST_CASE("herm_eig") {
  SUBCASE("diagonal") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    const auto r = herm_eig(d);
    CHECK(r.eigenvalues(0) == doctest::Approx(1));
    CHECK(r.eigenvalues(1) == doctest::Approx(2));
    CHECK(r.eigenvalues(2) == doctest::Approx(3));
    CHECK(std::abs(r.eigenvectors(1, 0)) == doctest::Approx(1));
    CHECK(std::abs(r.eigenvectors(0, 2)) == doctest::Approx(1));
  }
  SUBCASE("random reconstruction, orthonormality, trace") {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = testing::random_hermitian(8);
      const auto r = herm_eig(h);
      const ComplexMatrix rec = r.eigenvectors * r.eigenvalues.cast<Complex>().asDiagonal() *
                                r.eigenvectors.adjoint();
      CHECK((rec - h).norm() <= 1e-10);
      CHECK((r.eigenvectors.adjoint() * r.eigenvectors - ComplexMatrix::Identity(8, 8)).norm() <= 1e-10);
      CHECK(std::abs(r.eigenvalues.sum() - h.trace().real()) <= 1e-10);
      for (int i = 1; i < 8; ++i) CHECK(r.eigenvalues(i - 1) <= r.eigenvalues(i));
    }
  }
  SUBCASE("non-Hermitian is rejected") {
    CHECK_THROWS_AS(herm_eig(spin_plus()), InputError);
  }
}

TEST_CASE("partial_trace") {
  SUBCASE("product state") {
    const int keep[] = {1};
    const ComplexMatrix rho = partial_trace(basis_ket("000"), keep);
    CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
    CHECK(rho.norm() == doctest::Approx(1.0));
  }
  SUBCASE("GHZ marginal is maximally mixed") {
    const ComplexVector ghz = (basis_ket("000") + basis_ket("111")) / std::sqrt(2.0);
    const int keep[] = {1};
    CHECK((partial_trace(ghz, keep) - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  }
  SUBCASE("W marginal on site 2") {
    const ComplexVector w = (basis_ket("001") + basis_ket("010") + basis_ket("100")) / std::sqrt(3.0);
    const int keep[] = {2};
    const ComplexMatrix rho = partial_trace(w, keep);
    CHECK(rho(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(rho(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(rho(0, 1)) < 1e-15);
  }
  SUBCASE("keeping everything gives the projector") {
    const ComplexVector psi = testing::random_state(16);
    const int keep[] = {1, 2, 3, 4};
    CHECK((partial_trace(psi, keep) - psi * psi.adjoint()).norm() < 1e-14);
  }
  SUBCASE("trace and positivity") {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexVector psi = testing::random_state(32);
      const int keep[] = {2, 5};
      const ComplexMatrix rho = partial_trace(psi, keep);
      CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
      CHECK(herm_eig(rho).eigenvalues(0) >= -1e-12);
    }
  }
  SUBCASE("invalid keep sets") {
    const ComplexVector psi = basis_ket("00");
    const int out_of_range[] = {3};
    const int repeated[] = {1, 1};
    CHECK_THROWS_AS(partial_trace(psi, out_of_range), InputError);
    CHECK_THROWS_AS(partial_trace(psi, repeated), InputError);
    CHECK_THROWS_AS(partial_trace(ComplexVector::Ones(3).normalized(), out_of_range), InputError);
  }
}

TEST_CASE("check_unitary and check_hermitian") {
  const auto id = check_unitary(ComplexMatrix::Identity(4, 4));
  CHECK(id.ok);
  CHECK(id.residual == 0.0);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(check_unitary(rmat(uniform(-3, 3), uniform(-3, 3))).ok);
  }
  ComplexMatrix bad = rmat(0.4, 0.2);
  bad(0, 0) += 0.1;
  CHECK_FALSE(check_unitary(bad).ok);
  CHECK(check_hermitian(pauli_y()).ok);
  CHECK_FALSE(check_hermitian(spin_plus()).ok);
  CHECK(check_hermitian(spin_plus()).residual == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("polynomial roots") {
  SUBCASE("distinct real roots") {
    const double c[] = {1, -6, 11, -6};
    const auto r = polynomial_roots(c);
    REQUIRE(r.size() == 3);
    CHECK(std::abs(r[0] - 1.0) < 1e-13);
    CHECK(std::abs(r[1] - 2.0) < 1e-13);
    CHECK(std::abs(r[2] - 3.0) < 1e-13);
  }
  SUBCASE("double root is resolved beyond the companion accuracy") {
    const double c[] = {2, -3, 0, 1};  // (x-1)^2 (2x+1)
    const auto r = polynomial_roots(c);
    CHECK(std::abs(r[0] + 0.5) < 1e-13);
    CHECK(std::abs(r[1] - 1.0) < 1e-12);
    CHECK(std::abs(r[2] - 1.0) < 1e-12);
  }
  SUBCASE("complex pair") {
    const double c[] = {1, 0, 1};
    const auto r = polynomial_roots(c);
    CHECK(std::abs(std::abs(r[0]) - 1.0) < 1e-14);
    CHECK(std::abs(r[0] * r[1] - 1.0) < 1e-14);
  }
  SUBCASE("constant has no roots") {
    const double c[] = {0, 2};
    CHECK_THROWS_AS(polynomial_roots(c), InputError);
  }
}

TEST_CASE("distance_up_to_phase ignores a global phase") {
  const ComplexVector a = testing::random_state(8);
  CHECK(distance_up_to_phase(a, std::polar(1.0, 1.1) * a) < 1e-14);
  CHECK(distance_up_to_phase(basis_ket("0"), basis_ket("1")) == doctest::Approx(std::sqrt(2.0)));
}
