// Acceptance suite: every release gate in one binary, one verdict line per
// criterion. Exits nonzero on the first failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "mgbccm/baselines.hpp"
#include "mgbccm/sato.hpp"
#include "mgbccm/sdpc.hpp"
#include "oracles.hpp"
#include "test_channels.hpp"

using namespace mgbccm;

namespace {

int failures = 0;

#define REQUIRE_MSG(cond, ...)                                  \
  do {                                                          \
    if (!(cond)) {                                              \
      std::printf("  [check failed] ");                         \
      std::printf(__VA_ARGS__);                                 \
      std::printf("\n");                                        \
      ++failures;                                               \
    }                                                           \
  } while (0)

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void verdict(int number, const char* title, bool pass, double secs) {
  std::printf("[%s] criterion %d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", number, title, secs);
  if (!pass) ++failures;
}

ChannelPair random_channel(std::mt19937_64& rng, Eigen::Index t) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector h(t), g(t);
  for (Eigen::Index i = 0; i < t; ++i) {
    h[i] = Complex(gauss(rng), gauss(rng));
    g[i] = Complex(gauss(rng), gauss(rng));
  }
  return ChannelPair(h, g, 10.0);
}

// 1. inner and outer frontiers coincide on both reference channels
void criterion_coincidence() {
  bool pass = true;
  double worst_time = 0.0;
  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    Stopwatch watch;
    const CoincidenceReport r = coincidence_check(ch, 101);
    worst_time = std::max(worst_time, watch.seconds());
    REQUIRE_MSG(r.max_f1_gap <= 1e-8, "f1 gap %.3e", r.max_f1_gap);
    REQUIRE_MSG(r.max_f2_gap <= 1e-8, "f2 gap %.3e", r.max_f2_gap);
    pass = pass && r.pass && !r.degenerate;
  }
  pass = pass && worst_time < 1.0;
  verdict(1, "inner/outer coincidence <= 1e-8 bits on 101 interior points", pass, worst_time);
}

// 2. covariance-construction identities at relative 1e-9 on 50 points
void criterion_sdpc_identities() {
  Stopwatch watch;
  bool pass = true;
  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    const ChannelParameters p = channel_parameters(ch);
    for (int i = 0; i < 50; ++i) {
      const SdpcIdentityReport r = verify_sdpc_identities(ch, p, i / 50.0);
      REQUIRE_MSG(r.rel1 <= 1e-9, "quotient-1 residual %.3e at alpha %.3f", r.rel1, r.alpha);
      REQUIRE_MSG(r.rel2 <= 1e-9, "quotient-2 residual %.3e at alpha %.3f", r.rel2, r.alpha);
      pass = pass && r.pass;
    }
  }
  const double secs = watch.seconds();
  verdict(2, "transmit-design identity suite at relative 1e-9", pass && secs < 1.0, secs);
}

// 3. eigenvalue floor, root assignment, split-pencil spectrum, beam identities
void criterion_identity_suite() {
  Stopwatch watch;
  bool pass = true;

  std::mt19937_64 rng(0xf100du);
  for (int trial = 0; trial < 1000; ++trial) {
    const ChannelPair ch = random_channel(rng, 2 + trial % 3);
    const ChannelParameters p = channel_parameters(ch);
    if (!(p.lambda1 >= 1.0) || !(p.lambda2 >= 1.0)) {
      REQUIRE_MSG(false, "eigenvalue below 1: %.17g / %.17g", p.lambda1, p.lambda2);
      pass = false;
    }
    const double gram = ch.h.squaredNorm() * ch.g.squaredNorm() - std::norm(ch.h.dot(ch.g));
    if (gram > 1e-6 && !(p.lambda1 > 1.0 + 1e-9 && p.lambda2 > 1.0 + 1e-9)) {
      REQUIRE_MSG(false, "independent channel without strict gain (gram %.3e)", gram);
      pass = false;
    }
  }

  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    const ChannelParameters p = channel_parameters(ch);

    for (const ComplexMatrix& k : random_covariance_family(2, ch.power, 100, 0xcafeu)) {
      const AlphaAssignment asg = alpha_for_covariance(ch, p, k);
      if (std::abs(asg.residual) > 1e-8) {
        REQUIRE_MSG(false, "root residual %.3e", asg.residual);
        pass = false;
      }
    }

    for (int i = 1; i <= 25; ++i) {
      const double a = i / 26.0;
      const GenEigResult bot = smallest_gen_eig(gamma2_pencil(ch, p, a));
      const double expect = gamma1(ch, p, a) / p.lambda1;
      if (std::abs(bot.value - expect) > 1e-9 * expect) {
        REQUIRE_MSG(false, "split-pencil floor off by %.3e", std::abs(bot.value - expect));
        pass = false;
      }
      if (std::abs(bot.vector.dot(p.e1)) < 1.0 - 1e-8) {
        REQUIRE_MSG(false, "floor eigenvector misaligned at alpha %.3f", a);
        pass = false;
      }
      const ConverseReport conv = verify_converse_identities(ch, p, a);
      for (const auto& item : conv.items) {
        if (!item.pass) {
          REQUIRE_MSG(false, "%s residual %.3e at alpha %.3f", item.name.c_str(),
                      item.residual, a);
          pass = false;
        }
      }
    }
  }
  const double secs = watch.seconds();
  verdict(3, "eigenvalue floor, root assignment, and beam identities", pass && secs < 5.0,
          secs);
}

// 4. dense solver against the grid-and-refine Rayleigh oracle
void criterion_solver_oracle() {
  Stopwatch watch;
  bool pass = true;
  std::mt19937_64 rng(0x5eedbeefu);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = static_cast<Eigen::Index>(2 + trial % 3);
    const ComplexMatrix a = oracles::random_hermitian(t, rng);
    const ComplexMatrix b = oracles::random_hpd(t, rng);
    HermitianPencil pencil(a, b);
    const GenEigResult top = largest_gen_eig(pencil);
    const double oracle = oracles::realified_rayleigh_max(a, b, 7000u + trial, 6000, 300);
    if (std::abs(top.value - oracle) > 1e-6) {
      REQUIRE_MSG(false, "t=%d solver %.12g vs oracle %.12g", static_cast<int>(t), top.value,
                  oracle);
      pass = false;
    }
    const double residual = (pencil.a * top.vector - top.value * (pencil.b * top.vector)).norm();
    const double bound = 1e-10 * (pencil.a.norm() + std::abs(top.value) * pencil.b.norm());
    if (residual > bound) {
      REQUIRE_MSG(false, "eigenpair residual %.3e > %.3e", residual, bound);
      pass = false;
    }
  }
  const double secs = watch.seconds();
  verdict(4, "solver matches the Rayleigh grid oracle on 100 random pencils",
          pass && secs < 10.0, secs);
}

// 5. hull intercepts equal the corner points exactly; gamma1 monotone
void criterion_corners_monotone() {
  Stopwatch watch;
  bool pass = true;
  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    const ChannelParameters p = channel_parameters(ch);
    const RateRegion region = region_sweep(ch, 201);
    const auto [c1, c2] = corner_points(p, ch.mode);
    double r1_max = 0.0, r2_max = 0.0;
    for (const RatePoint& v : region.hull) {
      r1_max = std::max(r1_max, v.r1);
      r2_max = std::max(r2_max, v.r2);
    }
    if (r1_max != c1.r1 || r2_max != c2.r2) {
      REQUIRE_MSG(false, "intercepts (%.17g, %.17g) vs corners (%.17g, %.17g)", r1_max, r2_max,
                  c1.r1, c2.r2);
      pass = false;
    }
    const MonotonicityReport mono = monotonicity_check(ch, p, 201);
    if (!mono.pass || mono.worst_slope < -1e-12) {
      REQUIRE_MSG(false, "monotonicity: %s", mono.detail.c_str());
      pass = false;
    }
  }
  verdict(5, "hull intercepts equal corner points exactly; gamma1 nondecreasing", pass,
          watch.seconds());
}

// 6. the time-sharing baseline stays strictly inside the region
void criterion_time_sharing() {
  Stopwatch watch;
  bool pass = true;
  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    const RateRegion region = region_sweep(ch, 201);
    const auto frontier = time_share_frontier(ch, 101, 101);
    for (const TimeSharePoint& p : frontier) {
      if (!hull_contains(region, RatePoint{p.r1, p.r2}, 1e-9)) {
        REQUIRE_MSG(false, "baseline point (%.6f, %.6f) escapes the hull", p.r1, p.r2);
        pass = false;
      }
    }
    // even power split at the half-time point
    const double s = ch.rate_scale();
    const double r1 = 0.5 * s * std::log2(wiretap_eigenvalue(ch.h, ch.g, ch.power));
    const double r2 = 0.5 * s * std::log2(wiretap_eigenvalue(ch.g, ch.h, ch.power));
    const double gap = hull_r2_at(region, r1) - r2;
    if (!(gap > 1e-3)) {
      REQUIRE_MSG(false, "mid-frontier gap %.3e bits", gap);
      pass = false;
    }
  }
  const double secs = watch.seconds();
  verdict(6, "time-sharing is strictly suboptimal (> 1e-3 bits at mid-frontier)",
          pass && secs < 5.0, secs);
}

// 7. positive corner rates iff the attenuation vectors are independent
void criterion_positive_rates() {
  Stopwatch watch;
  bool pass = true;
  for (const ChannelPair& ch : {fixtures::example1(), fixtures::example2()}) {
    const ChannelParameters p = channel_parameters(ch);
    const auto [c1, c2] = corner_points(p, ch.mode);
    if (!(c1.r1 > 0.0 && c2.r2 > 0.0)) {
      REQUIRE_MSG(false, "corner rates (%.6f, %.6f) not strictly positive", c1.r1, c2.r2);
      pass = false;
    }
  }
  const ChannelPair parallel = fixtures::collapsed();
  const ChannelParameters p = channel_parameters(parallel);
  const auto [c1, c2] = corner_points(p, parallel.mode);
  const RateRegion region = region_sweep(parallel, 11);
  if (!(c1.r1 == 0.0 && c2.r2 == 0.0 && region.hull.size() == 1 &&
        region.hull[0].r1 == 0.0 && region.hull[0].r2 == 0.0)) {
    REQUIRE_MSG(false, "parallel-vector region is not the exact origin");
    pass = false;
  }
  verdict(7, "positive corners on both channels; parallel vectors collapse to (0,0)", pass,
          watch.seconds());
}

// 8. the closed-form combiner weights are local minima of the objectives
void criterion_minimizer_optimality() {
  Stopwatch watch;
  bool pass = true;
  const ChannelPair ch = fixtures::example1();
  std::mt19937_64 rng(0xabcdu);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double two_pi = 2.0 * std::acos(-1.0);
  const double step = 1e-4, diag = step / std::sqrt(2.0);
  const Complex offsets[8] = {{step, 0.0}, {-step, 0.0}, {0.0, step},  {0.0, -step},
                              {diag, diag}, {diag, -diag}, {-diag, diag}, {-diag, -diag}};
  double worst_margin = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const NoiseCorrelation rho(std::polar(0.97 * unif(rng), two_pi * unif(rng)));
    const ComplexMatrix k = random_covariance_family(2, 0.2 + 12.0 * unif(rng), 1,
                                                     40000u + trial)[0];
    const MinimizedBound b1 = f1(ch, rho, k);
    const MinimizedBound b2 = f2(ch, rho, k);
    const double base1 = f1_objective(ch, rho, k, b1.minimizer);
    const double base2 = f2_objective(ch, rho, k, b2.minimizer);
    for (const Complex& d : offsets) {
      worst_margin = std::min(worst_margin, f1_objective(ch, rho, k, b1.minimizer + d) - base1);
      worst_margin = std::min(worst_margin, f2_objective(ch, rho, k, b2.minimizer + d) - base2);
    }
  }
  if (worst_margin < -1e-12) {
    REQUIRE_MSG(false, "a compass perturbation improved the objective by %.3e", -worst_margin);
    pass = false;
  }
  verdict(8, "combiner weights survive 8-direction perturbation on 1000 trials", pass,
          watch.seconds());
}

}  // namespace

int main() {
  criterion_coincidence();
  criterion_sdpc_identities();
  criterion_identity_suite();
  criterion_solver_oracle();
  criterion_corners_monotone();
  criterion_time_sharing();
  criterion_positive_rates();
  criterion_minimizer_optimality();

  if (failures > 0) {
    std::printf("acceptance: %d failure(s)\n", failures);
    return 1;
  }
  std::printf("acceptance: all criteria satisfied\n");
  return 0;
}
