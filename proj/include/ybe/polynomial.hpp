#pragma once

#include <span>
#include <vector>

#include "ybe/linalg.hpp"

namespace ybe {

/// p(x) for coefficients ordered from the highest degree down.
Complex poly_eval(std::span<const double> coeffs, Complex x);
Complex poly_derivative_eval(std::span<const double> coeffs, Complex x);

/// Roots of a real polynomial (highest degree first) from the eigenvalues of
/// its companion matrix, then polished: clustered pairs are snapped to the
/// nearby critical point, isolated roots get one guarded Newton step.
/// Sorted by ascending modulus.
std::vector<Complex> polynomial_roots(std::span<const double> coeffs);

}  // namespace ybe
