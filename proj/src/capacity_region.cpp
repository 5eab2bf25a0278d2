#include "mgbccm/capacity_region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgbccm {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

double log2_clamped(double x) { return std::log2(x); }

// |v^H w|^2 with Eigen's conjugate-on-the-left dot product
double abs2_dot(const ComplexVector& v, const ComplexVector& w) {
  return std::norm(v.dot(w));
}

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// monotone chain; returns strictly convex vertices in counterclockwise order
std::vector<RatePoint> convex_hull(std::vector<RatePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatePoint& a, const RatePoint& b) {
                          return a.r1 == b.r1 && a.r2 == b.r2;
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<RatePoint> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// rotate so the walk starts at (0, r2_max), i.e. the top of the left edge
void start_at_top_left(std::vector<RatePoint>& hull) {
  if (hull.size() < 2) return;
  size_t best = 0;
  for (size_t i = 1; i < hull.size(); ++i) {
    if (hull[i].r1 < hull[best].r1 ||
        (hull[i].r1 == hull[best].r1 && hull[i].r2 > hull[best].r2)) {
      best = i;
    }
  }
  std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(best), hull.end());
}

RateRegion sweep_impl(const ChannelPair& ch, const ChannelParameters& params, int n_alpha) {
  if (n_alpha < 2) throw std::domain_error("region sweep needs at least 2 grid points");
  const double s = ch.rate_scale();

  RateRegion region;
  region.frontier.reserve(static_cast<size_t>(n_alpha));

  if (params.degenerate) {
    for (int i = 0; i < n_alpha; ++i) {
      const double a = static_cast<double>(i) / (n_alpha - 1);
      region.frontier.push_back(RegionPoint{a, 1.0, 1.0, 0.0, 0.0});
    }
    region.hull = {RatePoint{0.0, 0.0}};
    return region;
  }

  std::vector<RatePoint> corners;
  corners.push_back(RatePoint{0.0, 0.0});
  for (int i = 0; i < n_alpha; ++i) {
    const double a = static_cast<double>(i) / (n_alpha - 1);
    const double g1 = gamma1(ch, params, a);
    const double g2 = gamma2(ch, params, a).first;
    const double r1 = s * log2_clamped(g1);
    const double r2 = s * log2_clamped(g2);
    region.frontier.push_back(RegionPoint{a, g1, g2, r1, r2});
    corners.push_back(RatePoint{r1, 0.0});
    corners.push_back(RatePoint{0.0, r2});
    corners.push_back(RatePoint{r1, r2});
  }
  region.hull = convex_hull(std::move(corners));
  start_at_top_left(region.hull);
  return region;
}

}  // namespace

Mode mode_from_string(const std::string& name) {
  if (name == "real") return Mode::real_alphabet;
  if (name == "complex") return Mode::complex_alphabet;
  throw std::invalid_argument("mode must be 'real' or 'complex', got '" + name + "'");
}

std::string to_string(Mode mode) {
  return mode == Mode::real_alphabet ? "real" : "complex";
}

ChannelPair::ChannelPair(ComplexVector h_in, ComplexVector g_in, double power_in,
                         Mode mode_in)
    : h(std::move(h_in)), g(std::move(g_in)), power(power_in), mode(mode_in) {
  if (h.size() != g.size()) {
    throw std::invalid_argument("channel vectors must have equal length");
  }
  if (h.size() < 2) {
    throw std::invalid_argument("channel needs at least 2 transmit antennas");
  }
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("power must be positive and finite");
  }
  if (!h.allFinite() || !g.allFinite()) {
    throw std::invalid_argument("channel vectors must be finite");
  }
  if (mode == Mode::real_alphabet) {
    for (Eigen::Index i = 0; i < h.size(); ++i) {
      if (h[i].imag() != 0.0 || g[i].imag() != 0.0) {
        throw std::invalid_argument("real mode requires real attenuation vectors");
      }
    }
  }
}

ChannelParameters channel_parameters(const ChannelPair& ch) {
  const auto& pol = numeric_policy();

  HermitianPencil forward(identity_plus_scaled_outer(ch.power, ch.h),
                          identity_plus_scaled_outer(ch.power, ch.g));
  HermitianPencil reverse(forward.b, forward.a);

  GenEigResult one = largest_gen_eig(forward);
  GenEigResult two = largest_gen_eig(reverse);

  // independent closed-form path over span{h, g}
  const SpanPencilEigs span_fwd = rank_one_update_eigs(ch.power, ch.h, ch.power, ch.g);
  const SpanPencilEigs span_rev = rank_one_update_eigs(ch.power, ch.g, ch.power, ch.h);
  const double mismatch =
      std::max(std::abs(one.value - span_fwd.value_max) / std::max(1.0, one.value),
               std::abs(two.value - span_rev.value_max) / std::max(1.0, two.value));
  if (mismatch > pol.cross_check_rel) {
    throw std::runtime_error("channel_parameters: dense and span eigenvalue paths disagree by " +
                             std::to_string(mismatch));
  }

  ChannelParameters params;
  params.lambda1 = std::max(one.value, 1.0);
  params.lambda2 = std::max(two.value, 1.0);
  params.e1 = std::move(one.vector);
  params.e2 = std::move(two.vector);

  // an eigenvalue within rounding of the floor is the floor
  if (std::abs(params.lambda1 - 1.0) <= pol.degenerate_eig_tol) params.lambda1 = 1.0;
  if (std::abs(params.lambda2 - 1.0) <= pol.degenerate_eig_tol) params.lambda2 = 1.0;
  params.degenerate = params.lambda1 == 1.0 && params.lambda2 == 1.0;

  // linear independence forces both eigenvalues strictly above 1
  const double hh = ch.h.squaredNorm(), gg = ch.g.squaredNorm();
  const double gram_det = hh * gg - abs2_dot(ch.h, ch.g);
  if (gram_det > pol.gram_det_tol && !(params.lambda1 > 1.0 && params.lambda2 > 1.0)) {
    throw std::runtime_error("channel_parameters: independent channel produced a unit eigenvalue");
  }
  return params;
}

double gamma1(const ChannelPair& ch, const ChannelParameters& params, double alpha) {
  require_alpha(alpha);
  if (params.degenerate) return 1.0;
  if (alpha == 1.0) return params.lambda1;  // shared code path with the corner point
  const double hp = abs2_dot(ch.h, params.e1);
  const double gp = abs2_dot(ch.g, params.e1);
  return (1.0 + alpha * ch.power * hp) / (1.0 + alpha * ch.power * gp);
}

HermitianPencil gamma2_pencil(const ChannelPair& ch, const ChannelParameters& params,
                              double alpha) {
  require_alpha(alpha);
  const double hp = abs2_dot(ch.h, params.e1);
  const double gp = abs2_dot(ch.g, params.e1);
  const double scale_g = (1.0 - alpha) * ch.power / (1.0 + alpha * ch.power * gp);
  const double scale_h = (1.0 - alpha) * ch.power / (1.0 + alpha * ch.power * hp);
  return HermitianPencil(identity_plus_scaled_outer(scale_g, ch.g),
                         identity_plus_scaled_outer(scale_h, ch.h));
}

std::pair<double, ComplexVector> gamma2(const ChannelPair& ch,
                                        const ChannelParameters& params, double alpha) {
  require_alpha(alpha);
  if (params.degenerate) return {1.0, params.e1};
  if (alpha == 1.0) return {1.0, params.e1};  // pencil collapses to (I, I)

  GenEigResult top = largest_gen_eig(gamma2_pencil(ch, params, alpha));

  // closed-form cross-check on the eigenvalue (vectors are ill-conditioned
  // near alpha = 1 where the two span eigenvalues coalesce)
  const double hp = abs2_dot(ch.h, params.e1);
  const double gp = abs2_dot(ch.g, params.e1);
  const double scale_g = (1.0 - alpha) * ch.power / (1.0 + alpha * ch.power * gp);
  const double scale_h = (1.0 - alpha) * ch.power / (1.0 + alpha * ch.power * hp);
  const SpanPencilEigs span = rank_one_update_eigs(scale_g, ch.g, scale_h, ch.h);
  if (std::abs(top.value - span.value_max) >
      numeric_policy().cross_check_rel * std::max(1.0, top.value)) {
    throw std::runtime_error("gamma2: dense and span eigenvalue paths disagree");
  }
  return {top.value, std::move(top.vector)};
}

RateRegion region_sweep(const ChannelPair& ch, int n_alpha) {
  return sweep_impl(ch, channel_parameters(ch), n_alpha);
}

std::pair<RatePoint, RatePoint> corner_points(const ChannelParameters& params, Mode mode) {
  const double s = mode == Mode::real_alphabet ? 0.5 : 1.0;
  return {RatePoint{s * std::log2(params.lambda1), 0.0},
          RatePoint{0.0, s * std::log2(params.lambda2)}};
}

RateRegion region_sweep_beta(const ChannelPair& ch, int n_beta) {
  RateRegion mirrored = region_sweep(ch.swapped(), n_beta);

  RateRegion region;
  region.frontier.reserve(mirrored.frontier.size());
  for (const RegionPoint& p : mirrored.frontier) {
    region.frontier.push_back(RegionPoint{p.alpha, p.gamma2, p.gamma1, p.r2, p.r1});
  }
  std::vector<RatePoint> corners{RatePoint{0.0, 0.0}};
  for (const RatePoint& v : mirrored.hull) corners.push_back(RatePoint{v.r2, v.r1});
  region.hull = convex_hull(std::move(corners));
  start_at_top_left(region.hull);
  return region;
}

MonotonicityReport monotonicity_check(const ChannelPair& ch,
                                      const ChannelParameters& params, int n_alpha) {
  if (n_alpha < 2) throw std::domain_error("monotonicity grid needs at least 2 points");
  const auto& pol = numeric_policy();
  MonotonicityReport report;

  if (params.degenerate) {
    report.detail = "degenerate channel: gamma1 is identically 1";
    return report;
  }

  const double hp = abs2_dot(ch.h, params.e1);
  const double gp = abs2_dot(ch.g, params.e1);

  double prev = gamma1(ch, params, 0.0);
  for (int i = 0; i < n_alpha; ++i) {
    const double a = static_cast<double>(i) / (n_alpha - 1);
    const double g1 = gamma1(ch, params, a);
    const double step = g1 - prev;
    if (step < report.worst_step) {
      report.worst_step = step;
      if (step < -pol.mono_slack) {
        report.pass = false;
        report.failing_alpha = a;
        report.detail = "gamma1 decreased by " + std::to_string(-step) + " at alpha " +
                        std::to_string(a);
      }
    }
    prev = g1;

    const double den = 1.0 + a * ch.power * gp;
    const double slope = ch.power * (hp - gp) / (den * den);
    if (slope < report.worst_slope) {
      report.worst_slope = slope;
      if (slope < -pol.mono_slack) {
        report.pass = false;
        report.failing_alpha = a;
        report.detail = "gamma1 slope " + std::to_string(slope) + " at alpha " +
                        std::to_string(a);
      }
    }
  }
  return report;
}

double hull_r2_at(const RateRegion& region, double r1) {
  double best = 0.0;
  const auto& hull = region.hull;
  const size_t n = hull.size();
  if (n == 1) return (r1 <= 0.0) ? hull[0].r2 : 0.0;
  for (size_t i = 0; i < n; ++i) {
    const RatePoint& a = hull[i];
    const RatePoint& b = hull[(i + 1) % n];
    const double lo = std::min(a.r1, b.r1), hi = std::max(a.r1, b.r1);
    if (r1 < lo - 1e-12 || r1 > hi + 1e-12) continue;
    if (hi - lo < 1e-15) {
      best = std::max(best, std::max(a.r2, b.r2));
    } else {
      const double t = (r1 - a.r1) / (b.r1 - a.r1);
      best = std::max(best, a.r2 + t * (b.r2 - a.r2));
    }
  }
  return best;
}

bool hull_contains(const RateRegion& region, RatePoint p, double tol) {
  if (p.r1 < -tol || p.r2 < -tol) return false;
  double r1_max = 0.0;
  for (const RatePoint& v : region.hull) r1_max = std::max(r1_max, v.r1);
  if (p.r1 > r1_max + tol) return false;
  return p.r2 <= hull_r2_at(region, std::clamp(p.r1, 0.0, r1_max)) + tol;
}

}  // namespace mgbccm
