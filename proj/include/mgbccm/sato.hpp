#pragma once

#include <span>
#include <string>
#include <vector>

#include "mgbccm/capacity_region.hpp"

namespace mgbccm {

/// Correlation coefficient between the two receiver noises in the
/// cooperative (genie-aided) channel family. Magnitude is at most 1; the
/// bound expressions additionally require it strictly inside the unit disk.
struct NoiseCorrelation {
  Complex rho;

  explicit NoiseCorrelation(Complex rho_in);
};

/// One evaluation of the cooperative outer bound for a fixed input
/// covariance: the two rate bounds (bits) and the minimizers that attain
/// them. Rates are clamped at zero.
struct OuterBoundPoint {
  Complex rho;
  ComplexMatrix k_x;
  double f1 = 0.0;
  double f2 = 0.0;
  Complex nu_star;
  Complex mu_star;
};

struct MinimizedBound {
  double value = 0.0;  // bits, not clamped
  Complex minimizer;
};

/// The canonical correlation (g^H e1)/(h^H e1) that makes the outer bound
/// meet the achievable frontier.
NoiseCorrelation rho_canonical(const ChannelPair& ch, const ChannelParameters& params);

/// Pre-log numerator of the user-1 bound at combining weight nu.
double f1_objective(const ChannelPair& ch, const NoiseCorrelation& rho,
                    const ComplexMatrix& k_x, Complex nu);

/// Pre-log numerator of the user-2 bound at combining weight mu. The noise
/// cross term carries the conjugated correlation because the genie pair is
/// swapped for user 2.
double f2_objective(const ChannelPair& ch, const NoiseCorrelation& rho,
                    const ComplexMatrix& k_x, Complex mu);

/// min over nu of log2(f1_objective / (1 - |rho|^2)); the minimizer
/// (rho + g^H K h)/(1 + g^H K g) is exact because the objective is a convex
/// quadratic in nu.
MinimizedBound f1(const ChannelPair& ch, const NoiseCorrelation& rho,
                  const ComplexMatrix& k_x);

/// Mirror bound for user 2 with minimizer (rho* + h^H K g)/(1 + h^H K h).
MinimizedBound f2(const ChannelPair& ch, const NoiseCorrelation& rho,
                  const ComplexMatrix& k_x);

/// Evaluates (f1, f2) over a family of PSD covariances with trace at most
/// the budget, clamping rates at zero.
std::vector<OuterBoundPoint> outer_region(const ChannelPair& ch, const NoiseCorrelation& rho,
                                          double trace_budget,
                                          std::span<const ComplexMatrix> family);

/// Deterministic sample of PSD matrices with the given trace, for stress
/// tests of the slice assignment and the bound evaluations.
std::vector<ComplexMatrix> random_covariance_family(Eigen::Index t, double trace, int count,
                                                    unsigned seed);

/// Quadratic-form mismatch between a covariance and the alpha-slice it
/// should belong to; zero exactly on the slice.
double alpha_slice_residual(const ChannelPair& ch, const ChannelParameters& params,
                            const ComplexMatrix& k_x, double alpha);

/// The slice parameter assigned to a covariance: the root of the slice
/// residual over [0, 1], found by a scan-then-bisect search. The residual at
/// 0 is nonnegative and at 1 nonpositive, so a bracketed root always exists.
struct AlphaAssignment {
  ComplexMatrix k_x;
  double alpha = 0.0;
  double residual = 0.0;
};

AlphaAssignment alpha_for_covariance(const ChannelPair& ch, const ChannelParameters& params,
                                     const ComplexMatrix& k_x);

/// Identities that certify the outer bound is tight on the achievable
/// frontier, each evaluated at one interior alpha.
struct ConverseReport {
  struct Item {
    std::string name;
    bool pass = false;
    double residual = 0.0;
  };
  bool pass = false;
  double alpha = 0.0;
  std::vector<Item> items;
};

ConverseReport verify_converse_identities(const ChannelPair& ch,
                                          const ChannelParameters& params, double alpha);

/// Sweeps an interior alpha grid and compares the outer bound at the
/// canonical correlation and covariance against the achievable quotients.
struct CoincidenceReport {
  bool pass = false;
  bool degenerate = false;  // collapsed channel: nothing to compare
  int n_alpha = 0;
  double max_f1_gap = 0.0;
  double max_f2_gap = 0.0;
};

CoincidenceReport coincidence_check(const ChannelPair& ch, int n_alpha);

}  // namespace mgbccm
