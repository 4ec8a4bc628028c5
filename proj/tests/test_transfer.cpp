#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "support.hpp"
#include "ybe/entanglement.hpp"
#include "ybe/transfer.hpp"

using namespace ybe;
using testing::uniform;

namespace {

const double kBetaBlock = std::acos(-std::sqrt(6.0) / 3);

TransferSpec spec_of(int n, double beta, double theta, int m1 = 1, int m2 = 2) {
  return {n, beta, theta, m1, m2, 20.0, 5001};
}

}  // namespace

TEST_CASE("one-magnon Hamiltonian") {
  SUBCASE("hopping-free point") {
    const ComplexMatrix h = one_magnon_h(spec_of(5, M_PI / 2, 0.4));
    CHECK((h + 4.0 * ComplexMatrix::Identity(5, 5)).norm() <= 1e-15);
  }
  SUBCASE("closed-form spectrum, N = 6, beta = pi/3") {
    // independent evaluation of the closed form
    const double expected[] = {-3.025255128608411, -5.474744871391588, -5.949489742783179,
                               -5.47474487139159,  -3.025255128608411, -1.050510257216821};
    const RealVector e = ej_spectrum(spec_of(6, std::acos(0.5), 0.0));
    for (int j = 0; j < 6; ++j) CHECK(std::abs(e(j) - expected[j]) <= 1e-12);
  }
  SUBCASE("closed form equals diagonalization") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 3 + trial % 8;
      const TransferSpec s = spec_of(n, uniform(-3, 3), uniform(-3, 3));
      const ComplexMatrix h = one_magnon_h(s);
      CHECK(check_hermitian(h, 1e-14).ok);
      RealVector e = ej_spectrum(s);
      std::sort(e.data(), e.data() + n);
      CHECK((herm_eig(h).eigenvalues - e).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  SUBCASE("blockade spectrum is degenerate on the populated modes") {
    // the j = 2 mode has no weight on the (1, 2) bond
    const RealVector e = ej_spectrum(spec_of(4, kBetaBlock, 0.0));
    CHECK(std::abs(e(0) - e(2)) <= 1e-12);
    CHECK(std::abs(e(0) - e(3)) <= 1e-12);
    CHECK(std::abs(e(1)) <= 1e-12);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(validate(spec_of(2, 0.1, 0.0)), InputError);
    CHECK_THROWS_AS(validate(spec_of(5, 0.1, 0.0, 2, 2)), InputError);
    CHECK_THROWS_AS(validate(spec_of(5, 0.1, 0.0, 3, 2)), InputError);
    CHECK_THROWS_AS(validate(spec_of(5, 0.1, 0.0, 1, 6)), InputError);
    TransferSpec s = spec_of(5, 0.1, 0.0);
    s.n_t = 1;
    CHECK_THROWS_AS(validate(s), InputError);
  }
}

TEST_CASE("amplitudes") {
  SUBCASE("initial state") {
    const ComplexVector a = alpha_t(spec_of(7, 0.3, 0.2, 2, 5), 0.0);
    for (int k = 0; k < 7; ++k) {
      const double expected = (k == 1 || k == 4) ? 1.0 / std::sqrt(2.0) : 0.0;
      CHECK(std::abs(a(k) - expected) <= 1e-14);
    }
  }
  SUBCASE("Fourier sum equals direct evolution, norm conserved") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 3 + trial % 8;
      const int m1 = 1 + trial % (n - 1);
      const TransferSpec s = spec_of(n, uniform(-3, 3), uniform(-3, 3), m1, n);
      const double t = uniform(0, 30);
      const ComplexVector a = alpha_t(s, t);
      CHECK((a - alpha_t_evolved(s, t)).norm() <= 1e-10);
      CHECK(std::abs(a.squaredNorm() - 1.0) <= 1e-10);
    }
  }
  SUBCASE("timeline") {
    TransferSpec s = spec_of(6, 0.7, 0.4);
    s.n_t = 101;
    const AmplitudeTimeline tl = amplitude_timeline(s);
    CHECK(tl.times.size() == 101);
    CHECK(tl.times(100) == 20.0);
    for (int i = 0; i < 101; ++i) CHECK(std::abs(tl.alphas.col(i).squaredNorm() - 1.0) <= 1e-10);
  }
  SUBCASE("four sites") {
    for (double beta : {0.2, 0.9, -1.3}) {
      const double w = n4_frequency(beta);
      for (double t : {0.0, 0.37, 1.9, 7.25}) {
        const ComplexVector a = alpha_t(spec_of(4, beta, 0.0), t);
        const double c = std::abs(std::cos(w * t)) / std::sqrt(2.0);
        const double sn = std::abs(std::sin(w * t)) / std::sqrt(2.0);
        CHECK(std::abs(std::abs(a(0)) - c) <= 1e-10);
        CHECK(std::abs(std::abs(a(1)) - c) <= 1e-10);
        CHECK(std::abs(std::abs(a(2)) - sn) <= 1e-10);
        CHECK(std::abs(std::abs(a(3)) - sn) <= 1e-10);
      }
    }
  }
}

TEST_CASE("pair concurrence") {
  SUBCASE("initial bond is maximally entangled") {
    CHECK(concurrence_t(spec_of(6, 0.5, 0.1), 1, 2, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("four-site transfer and blockade") {
    for (double beta : {0.2, 0.9}) {
      const double w = n4_frequency(beta);
      for (double t = 0; t < 10; t += 0.37) {
        CHECK(std::abs(concurrence_t(spec_of(4, beta, 0.0), 3, 4, t) - std::pow(std::sin(w * t), 2)) <=
              1e-10);
        CHECK(std::abs(concurrence_t(spec_of(4, beta, 0.0), 3, 4, t + M_PI / std::abs(w)) -
                       concurrence_t(spec_of(4, beta, 0.0), 3, 4, t)) <= 1e-10);
      }
    }
    for (double t = 0; t < 20; t += 0.5) {
      CHECK(concurrence_t(spec_of(4, kBetaBlock, 0.0), 3, 4, t) <= 1e-10);
    }
  }
  SUBCASE("shortcut equals Wootters on the full state") {
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 3 + trial % 6;
      const TransferSpec s = spec_of(n, uniform(-3, 3), uniform(-3, 3), 1, 1 + n / 2);
      const double t = uniform(0, 20);
      const ComplexVector full = one_magnon_state(alpha_t(s, t));
      for (int l1 = 1; l1 <= n; ++l1) {
        for (int l2 = l1 + 1; l2 <= n; ++l2) {
          const int keep[] = {l1, l2};
          const double w = wootters2(partial_trace(full, keep));
          CHECK(std::abs(w - concurrence_t(s, l1, l2, t)) <= 1e-10);
        }
      }
    }
  }
  SUBCASE("pair validation") {
    CHECK_THROWS_AS(concurrence_t(spec_of(4, 0.2, 0.0), 2, 2, 1.0), InputError);
    CHECK_THROWS_AS(concurrence_t(spec_of(4, 0.2, 0.0), 0, 2, 1.0), InputError);
  }
  SUBCASE("timeline bounds") {
    const ConcurrenceTimeline tl = concurrence_timeline(spec_of(6, 0.8, 1.1), 3, 5);
    CHECK(tl.c_values.minCoeff() >= 0.0);
    CHECK(tl.c_values.maxCoeff() <= 1.0);
  }
}

TEST_CASE("frequency") {
  CHECK(n4_frequency(0.0) == doctest::Approx(2.0));
  CHECK(std::abs(n4_frequency(kBetaBlock)) <= 1e-14);
  const double beta_star = 0.5 * std::acos(std::sqrt(3.0) / 3);
  const double h = 1e-3;
  const double slope = (8 * (n4_frequency(beta_star + h) - n4_frequency(beta_star - h)) -
                        (n4_frequency(beta_star + 2 * h) - n4_frequency(beta_star - 2 * h))) /
                       (12 * h);
  CHECK(std::abs(slope) <= 1e-10);
  CHECK(n4_frequency(beta_star) == doctest::Approx(1.0 + std::sqrt(3.0)));
}

TEST_CASE("sweep") {
  SUBCASE("reflection fixing the initial bond") {
    // k -> m1 + m2 - k reverses the ring, which flips the sign of theta
    const int n = 6;
    const TransferSpec s = spec_of(n, 0.7, 0.0, 2, 3);
    auto reflect = [&](int k) { return ((5 - k) % n + n) % n == 0 ? n : ((5 - k) % n + n) % n; };
    for (double theta : {0.3, -1.2, 2.5}) {
      TransferSpec a = s, b = s;
      a.theta_ac = theta;
      b.theta_ac = -theta;
      for (double t : {0.4, 3.3, 11.0}) {
        CHECK(std::abs(concurrence_t(a, 1, 4, t) - concurrence_t(b, reflect(1), reflect(4), t)) <=
              1e-12);
        CHECK(std::abs(concurrence_t(a, 5, 6, t) - concurrence_t(b, reflect(5), reflect(6), t)) <=
              1e-12);
      }
    }
  }
  SUBCASE("no-field local maximum near t = 14.7") {
    const TransferSpec s = spec_of(6, std::acos(0.5), 0.0);
    const MaxReport r = sweep(s, 3, 4, {0.0}, linspace(14.0, 15.4, 351));
    CHECK(r.t_star == doctest::Approx(14.706).epsilon(1e-3 / 14.706));
    CHECK(r.c_max == doctest::Approx(0.4554).epsilon(1e-3));
  }
  SUBCASE("CSV rows") {
    std::ostringstream csv;
    const MaxReport r = sweep(spec_of(5, 0.4, 0.0), 2, 4, {-0.1, 0.1}, {0.0, 1.0, 2.0}, &csv);
    const std::string text = csv.str();
    CHECK(text.rfind("theta,t,concurrence\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK(r.n == 5);
    CHECK(r.l1 == 2);
    CHECK(r.l2 == 4);
    CHECK_THROWS_AS(sweep(spec_of(5, 0.4, 0.0), 2, 4, {}, {1.0}), InputError);
  }
}

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 1.0, 5);
  REQUIRE(v.size() == 5);
  CHECK(v[2] == 0.5);
  CHECK(v[4] == 1.0);
}
