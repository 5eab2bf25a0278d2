#pragma once

#include <utility>
#include <vector>

#include "mgbccm/capacity_region.hpp"

namespace mgbccm {

/// One point of the time-sharing baseline: user 1 transmits alone with power
/// p1 for a fraction tau1 of the time, user 2 with p2 for the rest, subject
/// to tau1 p1 + (1 - tau1) p2 <= P.
struct TimeSharePoint {
  double tau1 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Secrecy capacity when user 1 is the only intended receiver and user 2 a
/// pure eavesdropper: s log2 lambda1.
double miso_wiretap_capacity(const ChannelPair& ch);

/// Largest eigenvalue of the power-p channel pencil for the given
/// (transmit, eavesdropper) vector pair; 1 at zero power.
double wiretap_eigenvalue(const ComplexVector& to, const ComplexVector& from, double p);

/// Sweeps the time fraction and the power split, recomputing the single-user
/// eigenvalues at each candidate power, and returns the Pareto-maximal
/// points ordered by increasing r1.
std::vector<TimeSharePoint> time_share_frontier(const ChannelPair& ch, int n_tau,
                                                int n_power);

/// Scalar (single-antenna) channel: at most one user can have a positive
/// secrecy rate, the one with the larger attenuation magnitude.
std::pair<double, double> single_antenna_sanity(Complex h, Complex g, double power,
                                                Mode mode);

}  // namespace mgbccm
