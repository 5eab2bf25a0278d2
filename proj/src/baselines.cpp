#include "mgbccm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgbccm {

double miso_wiretap_capacity(const ChannelPair& ch) {
  const ChannelParameters params = channel_parameters(ch);
  return ch.rate_scale() * std::log2(params.lambda1);
}

double wiretap_eigenvalue(const ComplexVector& to, const ComplexVector& from, double p) {
  if (p <= 0.0) return 1.0;
  HermitianPencil pencil(identity_plus_scaled_outer(p, to),
                         identity_plus_scaled_outer(p, from));
  const double value = largest_gen_eig(pencil).value;
  return std::max(value, 1.0);
}

std::vector<TimeSharePoint> time_share_frontier(const ChannelPair& ch, int n_tau,
                                                int n_power) {
  if (n_tau < 2 || n_power < 2) {
    throw std::domain_error("time-sharing grids need at least 2 points each");
  }
  const double s = ch.rate_scale();
  const double p_total = ch.power;

  std::vector<TimeSharePoint> candidates;
  candidates.reserve(static_cast<size_t>(n_tau) * n_power);
  for (int i = 0; i < n_tau; ++i) {
    const double tau1 = static_cast<double>(i) / (n_tau - 1);
    if (tau1 == 0.0) {
      candidates.push_back(TimeSharePoint{
          0.0, 0.0, p_total, 0.0, s * std::log2(wiretap_eigenvalue(ch.g, ch.h, p_total))});
      continue;
    }
    if (tau1 == 1.0) {
      candidates.push_back(TimeSharePoint{
          1.0, p_total, 0.0, s * std::log2(wiretap_eigenvalue(ch.h, ch.g, p_total)), 0.0});
      continue;
    }
    const double p1_max = p_total / tau1;
    for (int j = 0; j < n_power; ++j) {
      const double p1 = p1_max * static_cast<double>(j) / (n_power - 1);
      const double p2 = (p_total - tau1 * p1) / (1.0 - tau1);
      const double r1 = s * tau1 * std::log2(wiretap_eigenvalue(ch.h, ch.g, p1));
      const double r2 = s * (1.0 - tau1) * std::log2(wiretap_eigenvalue(ch.g, ch.h, p2));
      candidates.push_back(TimeSharePoint{tau1, p1, p2, r1, r2});
    }
  }

  // Pareto filter: keep points no other candidate dominates
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.r1 > b.r1 || (a.r1 == b.r1 && a.r2 > b.r2);
  });
  std::vector<TimeSharePoint> frontier;
  double best_r2 = -1.0;
  for (const TimeSharePoint& p : candidates) {
    if (p.r2 > best_r2) {
      frontier.push_back(p);
      best_r2 = p.r2;
    }
  }
  std::reverse(frontier.begin(), frontier.end());  // increasing r1
  return frontier;
}

std::pair<double, double> single_antenna_sanity(Complex h, Complex g, double power,
                                                Mode mode) {
  if (!(power > 0.0)) throw std::domain_error("power must be positive");
  const double s = mode == Mode::real_alphabet ? 0.5 : 1.0;
  const double q1 = (1.0 + power * std::norm(h)) / (1.0 + power * std::norm(g));
  const double r1 = std::max(0.0, s * std::log2(q1));
  const double r2 = std::max(0.0, s * std::log2(1.0 / q1));
  return {r1, r2};
}

}  // namespace mgbccm
