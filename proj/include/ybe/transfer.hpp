#pragma once

// One-magnon dynamics on the periodic eta = pi/2 chain with a per-bond
// hopping phase theta. Site k is the state with only spin k up.

#include <iosfwd>
#include <vector>

#include "ybe/linalg.hpp"

namespace ybe {

struct TransferSpec {
  int n_sites = 6;
  double beta = 0.0;
  double theta_ac = 0.0;
  int m1 = 1;
  int m2 = 2;
  double t_max = 20.0;
  int n_t = 5001;
};

struct AmplitudeTimeline {
  RealVector times;
  ComplexMatrix alphas;  // n_sites x n_t
};

struct ConcurrenceTimeline {
  RealVector times;
  RealVector c_values;
};

struct MaxReport {
  double c_max = 0.0;
  double theta_star = 0.0;
  double t_star = 0.0;
  int n = 0;
  double beta = 0.0;
  int m1 = 0;
  int m2 = 0;
  int l1 = 0;
  int l2 = 0;
};

void validate(const TransferSpec& spec);

/// Diagonal -4; <n+1|H|n> = sqrt2 sin(2 beta) e^{i theta},
/// <n+2|H|n> = cos^2(beta) e^{2 i theta}, indices mod N, plus conjugates.
ComplexMatrix one_magnon_h(const TransferSpec& spec);

/// E_j = -4 + 2 sqrt2 sin(2b) cos(theta - 2 pi j/N) + 2 cos^2(b) cos(2 theta - 4 pi j/N),
/// j = 1..N.
RealVector ej_spectrum(const TransferSpec& spec);

/// Amplitudes of (S+_{m1} + S+_{m2})|down...down>/sqrt2 after time t, from the
/// Fourier sum over E_j.
ComplexVector alpha_t(const TransferSpec& spec, double t);

/// Same, by exp(-iHt) on the one-magnon block.
ComplexVector alpha_t_evolved(const TransferSpec& spec, double t);

/// Full 2^N state with the given one-magnon amplitudes.
ComplexVector one_magnon_state(const ComplexVector& alphas);

AmplitudeTimeline amplitude_timeline(const TransferSpec& spec);

/// 2 |alpha_l1| |alpha_l2|.
double concurrence_t(const TransferSpec& spec, int l1, int l2, double t);

ConcurrenceTimeline concurrence_timeline(const TransferSpec& spec, int l1, int l2);

/// Grid maximum of C(theta, t) then golden-section refinement in t at the
/// best theta. Rows `theta,t,concurrence` go to `csv` when given.
MaxReport sweep(const TransferSpec& spec, int l1, int l2, const std::vector<double>& theta_grid,
                const std::vector<double>& t_grid, std::ostream* csv = nullptr);

/// sqrt2 sin(2 beta) + 2 cos^2(beta).
double n4_frequency(double beta);

/// Evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace ybe
