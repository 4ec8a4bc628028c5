#pragma once

#include <cmath>
#include <random>

#include "ybe/linalg.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline ybe::ComplexMatrix random_matrix(int n) {
  ybe::ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {uniform(-1, 1), uniform(-1, 1)};
  return m;
}

inline ybe::ComplexMatrix random_hermitian(int n) {
  const ybe::ComplexMatrix m = random_matrix(n);
  return 0.5 * (m + m.adjoint());
}

inline ybe::ComplexVector random_state(int dim) {
  ybe::ComplexVector v(dim);
  std::normal_distribution<double> g;
  for (int i = 0; i < dim; ++i) v(i) = {g(rng()), g(rng())};
  return v.normalized();
}

inline ybe::ComplexMatrix random_unitary(int n) {
  Eigen::HouseholderQR<ybe::ComplexMatrix> qr(random_matrix(n));
  return qr.householderQ() * ybe::ComplexMatrix::Identity(n, n);
}

}  // namespace testing
