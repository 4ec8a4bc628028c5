#include "ybe/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace ybe {

namespace {

constexpr double kClusterTol = 1e-6;

std::vector<double> derivative_coeffs(std::span<const double> c) {
  std::vector<double> d;
  const int deg = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < deg; ++i) d.push_back(c[i] * (deg - i));
  return d;
}

Complex newton_step(std::span<const double> c, Complex x) {
  const Complex dp = poly_derivative_eval(c, x);
  if (std::abs(dp) == 0.0) return x;
  return x - poly_eval(c, x) / dp;
}

}  // namespace

Complex poly_eval(std::span<const double> coeffs, Complex x) {
  Complex acc{0.0, 0.0};
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

Complex poly_derivative_eval(std::span<const double> coeffs, Complex x) {
  const auto d = derivative_coeffs(coeffs);
  return poly_eval(d, x);
}

std::vector<Complex> polynomial_roots(std::span<const double> coeffs) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0.0) ++lead;
  std::span<const double> c = coeffs.subspan(lead);
  if (c.size() < 2) throw InputError("polynomial_roots: polynomial has no roots");
  const int deg = static_cast<int>(c.size()) - 1;

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int j = 0; j < deg; ++j) comp(0, j) = -c[j + 1] / c[0];
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw NumericalError("polynomial_roots: eigensolver failed");
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);

  const auto dc = derivative_coeffs(c);
  std::vector<bool> done(deg, false);
  for (int i = 0; i < deg; ++i) {
    if (done[i]) continue;
    for (int j = i + 1; j < deg; ++j) {
      if (done[j]) continue;
      const double scale = std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[i] - roots[j]) < kClusterTol * scale) {
        // double root: converge on p'(x) = 0 from the midpoint
        Complex x = 0.5 * (roots[i] + roots[j]);
        for (int it = 0; it < 8; ++it) x = newton_step(dc, x);
        if (std::abs(x - roots[i]) < 10 * kClusterTol * scale) {
          roots[i] = roots[j] = x;
          done[i] = done[j] = true;
        }
        break;
      }
    }
    if (!done[i]) {
      const Complex x = newton_step(c, roots[i]);
      if (std::abs(poly_eval(c, x)) < std::abs(poly_eval(c, roots[i]))) roots[i] = x;
      done[i] = true;
    }
  }

  std::stable_sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return std::abs(a) < std::abs(b);
  });
  return roots;
}

}  // namespace ybe
