#pragma once

#include "mgbccm/capacity_region.hpp"

namespace mgbccm {

/// Transmit covariance design: per-user covariances and their sum, the
/// channel input covariance. For the alpha-parameterized construction both
/// per-user parts are rank one and the total trace equals the power budget.
struct CovariancePair {
  ComplexMatrix k_u1;
  ComplexMatrix k_u2;
  ComplexMatrix k_x;
};

/// Dirty-paper precoding coefficient b = K_U1 h / (1 + h^H K_U1 h).
struct DpcCoefficient {
  ComplexVector b;
};

/// Rate bounds of the secret dirty-paper scheme for a given covariance
/// split. The raw values are reported alongside the clamped-at-zero pair so
/// infeasible user-supplied splits stay diagnosable.
struct SdpcRates {
  double r1 = 0.0;
  double r2 = 0.0;
  double r1_raw = 0.0;
  double r2_raw = 0.0;
};

/// Gaussian mutual-information values of the scheme, all in bits:
///   user1_dpc_gain   = log2(1 + h^H K_U1 h)       (interference pre-cancelled)
///   user1_leakage    = log2(1 + g^H K_U1 g)        (user 1's signal at user 2)
///   user2_rate       = log2[(1 + g^H K_X g) / (1 + g^H K_U1 g)]
///   user2_leakage    = log2[(1 + h^H K_X h) / (1 + h^H K_U1 h)]
struct MutualInfoTerms {
  double user1_dpc_gain = 0.0;
  double user1_leakage = 0.0;
  double user2_rate = 0.0;
  double user2_leakage = 0.0;
};

/// K_U1 = alpha P e1 e1^H, K_U2 = (1-alpha) P c2(alpha) c2(alpha)^H.
CovariancePair build_covariances(const ChannelPair& ch, const ChannelParameters& params,
                                 double alpha);

SdpcRates sdpc_rate_bounds(const ChannelPair& ch, const CovariancePair& cov);

DpcCoefficient dpc_coefficient(const ChannelPair& ch, const CovariancePair& cov);

MutualInfoTerms gaussian_mutual_info_terms(const ChannelPair& ch, const CovariancePair& cov);

/// Residuals of the two closed-form identities tying the scheme's rate
/// quotients to gamma1(alpha) and gamma2(alpha).
struct SdpcIdentityReport {
  bool pass = false;
  double alpha = 0.0;
  double quotient1 = 0.0;  // (1 + h^H K_U1 h) / (1 + g^H K_U1 g)
  double gamma1 = 0.0;
  double quotient2 = 0.0;  // double quotient of the user-2 bound
  double gamma2 = 0.0;
  double rel1 = 0.0;
  double rel2 = 0.0;
};

SdpcIdentityReport verify_sdpc_identities(const ChannelPair& ch,
                                          const ChannelParameters& params, double alpha);

}  // namespace mgbccm
