#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgbccm/pencil.hpp"

namespace mgbccm {

/// Output-rate convention. The complex-alphabet channel reports log2 rates
/// directly; the real-alphabet convention halves every rate.
enum class Mode { complex_alphabet, real_alphabet };

Mode mode_from_string(const std::string& name);
std::string to_string(Mode mode);

/// Two-user broadcast channel instance: attenuation vectors h (user 1) and
/// g (user 2) plus the total transmit power budget.
struct ChannelPair {
  ComplexVector h;
  ComplexVector g;
  double power = 0.0;
  Mode mode = Mode::complex_alphabet;

  ChannelPair(ComplexVector h_in, ComplexVector g_in, double power_in,
              Mode mode_in = Mode::complex_alphabet);

  Eigen::Index antennas() const { return h.size(); }
  double rate_scale() const { return mode == Mode::real_alphabet ? 0.5 : 1.0; }

  ChannelPair swapped() const { return ChannelPair(g, h, power, mode); }
};

/// Extremal eigenpairs of the two power-loaded channel pencils:
/// (lambda1, e1) for (I + P h h^H, I + P g g^H) and (lambda2, e2) for the
/// reversed pair. Both eigenvalues are at least 1; they exceed 1 exactly
/// when h and g are linearly independent. `degenerate` marks the collapsed
/// case lambda1 = lambda2 = 1 where the whole region is the origin.
struct ChannelParameters {
  double lambda1 = 1.0;
  ComplexVector e1;
  double lambda2 = 1.0;
  ComplexVector e2;
  bool degenerate = false;
};

ChannelParameters channel_parameters(const ChannelPair& ch);

/// One sample of the achievable frontier: the power split alpha, the two
/// rate quotients, and the corresponding rates (already in the channel's
/// output convention).
struct RegionPoint {
  double alpha = 0.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Frontier samples plus the convex hull of the swept rectangles. Hull
/// vertices are ordered counterclockwise starting at (0, r2_max).
struct RateRegion {
  std::vector<RegionPoint> frontier;
  std::vector<RatePoint> hull;
};

/// User-1 rate quotient at power split alpha.
double gamma1(const ChannelPair& ch, const ChannelParameters& params, double alpha);

/// The matrix pair whose largest eigenvalue is the user-2 quotient at the
/// split alpha.
HermitianPencil gamma2_pencil(const ChannelPair& ch, const ChannelParameters& params,
                              double alpha);

/// User-2 quotient and its beam direction c2(alpha). At alpha = 1 the pencil
/// collapses to (I, I); the quotient is exactly 1 and e1 is returned as the
/// (irrelevant) direction.
std::pair<double, ComplexVector> gamma2(const ChannelPair& ch,
                                        const ChannelParameters& params, double alpha);

RateRegion region_sweep(const ChannelPair& ch, int n_alpha);

/// Axis intercepts of the region: (s log2 lambda1, 0) and (0, s log2 lambda2).
std::pair<RatePoint, RatePoint> corner_points(const ChannelParameters& params, Mode mode);

/// Same region computed from the swapped channel and mirrored back; the two
/// parameterizations sweep the same frontier from opposite ends.
RateRegion region_sweep_beta(const ChannelPair& ch, int n_beta);

struct MonotonicityReport {
  bool pass = true;
  double worst_step = 0.0;        // most negative gamma1 increment found
  double worst_slope = 0.0;       // most negative derivative value found
  double failing_alpha = -1.0;
  std::string detail;
};

/// Checks that gamma1 is nondecreasing on a uniform grid and that its
/// closed-form derivative is nonnegative everywhere on the grid.
MonotonicityReport monotonicity_check(const ChannelPair& ch,
                                      const ChannelParameters& params, int n_alpha);

/// Height of the hull's upper boundary at abscissa r1 (0 outside the span).
double hull_r2_at(const RateRegion& region, double r1);

/// True if (p.r1, p.r2) lies inside or on the hull, with slack tol.
bool hull_contains(const RateRegion& region, RatePoint p, double tol);

}  // namespace mgbccm
