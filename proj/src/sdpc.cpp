#include "mgbccm/sdpc.hpp"

#include <cmath>
#include <stdexcept>

namespace mgbccm {

namespace {

double quad(const ComplexVector& v, const ComplexMatrix& m) {
  return std::real(v.dot(m * v));
}

void require_psd(const ComplexMatrix& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success ||
      solver.eigenvalues().minCoeff() < numeric_policy().psd_min_eig) {
    throw std::domain_error(std::string(what) + " is not positive semidefinite");
  }
}

void require_feasible(const ChannelPair& ch, const CovariancePair& cov) {
  require_psd(cov.k_u1, "K_U1");
  require_psd(cov.k_u2, "K_U2");
  const double total = cov.k_u1.trace().real() + cov.k_u2.trace().real();
  if (total > ch.power + numeric_policy().trace_tol) {
    throw std::domain_error("covariance trace " + std::to_string(total) +
                            " exceeds the power budget " + std::to_string(ch.power));
  }
}

}  // namespace

CovariancePair build_covariances(const ChannelPair& ch, const ChannelParameters& params,
                                 double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha must lie in [0, 1]");
  }
  const auto [g2, c2] = gamma2(ch, params, alpha);
  (void)g2;
  CovariancePair cov;
  cov.k_u1 = (alpha * ch.power) * hermitian_outer(params.e1);
  cov.k_u2 = ((1.0 - alpha) * ch.power) * hermitian_outer(c2);
  cov.k_x = cov.k_u1 + cov.k_u2;
  return cov;
}

SdpcRates sdpc_rate_bounds(const ChannelPair& ch, const CovariancePair& cov) {
  require_feasible(ch, cov);
  const MutualInfoTerms mi = gaussian_mutual_info_terms(ch, cov);
  const double s = ch.rate_scale();

  SdpcRates rates;
  rates.r1_raw = s * (mi.user1_dpc_gain - mi.user1_leakage);
  rates.r2_raw = s * (std::log2((1.0 + quad(ch.g, cov.k_x)) / (1.0 + quad(ch.h, cov.k_x))) +
                      (mi.user1_dpc_gain - mi.user1_leakage));
  rates.r1 = std::max(0.0, rates.r1_raw);
  rates.r2 = std::max(0.0, rates.r2_raw);
  return rates;
}

DpcCoefficient dpc_coefficient(const ChannelPair& ch, const CovariancePair& cov) {
  require_psd(cov.k_u1, "K_U1");
  const ComplexVector k_h = cov.k_u1 * ch.h;
  return DpcCoefficient{k_h / (1.0 + std::real(ch.h.dot(k_h)))};
}

MutualInfoTerms gaussian_mutual_info_terms(const ChannelPair& ch, const CovariancePair& cov) {
  require_feasible(ch, cov);
  MutualInfoTerms mi;
  mi.user1_dpc_gain = std::log2(1.0 + quad(ch.h, cov.k_u1));
  mi.user1_leakage = std::log2(1.0 + quad(ch.g, cov.k_u1));
  mi.user2_rate = std::log2((1.0 + quad(ch.g, cov.k_x)) / (1.0 + quad(ch.g, cov.k_u1)));
  mi.user2_leakage = std::log2((1.0 + quad(ch.h, cov.k_x)) / (1.0 + quad(ch.h, cov.k_u1)));
  return mi;
}

SdpcIdentityReport verify_sdpc_identities(const ChannelPair& ch,
                                          const ChannelParameters& params, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("identity check is defined for alpha in [0, 1)");
  }
  const CovariancePair cov = build_covariances(ch, params, alpha);

  SdpcIdentityReport report;
  report.alpha = alpha;
  report.gamma1 = gamma1(ch, params, alpha);
  report.gamma2 = gamma2(ch, params, alpha).first;

  const double h1 = 1.0 + quad(ch.h, cov.k_u1);
  const double g1v = 1.0 + quad(ch.g, cov.k_u1);
  const double hx = 1.0 + quad(ch.h, cov.k_x);
  const double gx = 1.0 + quad(ch.g, cov.k_x);

  report.quotient1 = h1 / g1v;
  report.quotient2 = (gx * h1) / (hx * g1v);
  report.rel1 = std::abs(report.quotient1 - report.gamma1) / report.gamma1;
  report.rel2 = std::abs(report.quotient2 - report.gamma2) / report.gamma2;

  const double tol = numeric_policy().identity_rel;
  report.pass = report.rel1 <= tol && report.rel2 <= tol;
  return report;
}

}  // namespace mgbccm
