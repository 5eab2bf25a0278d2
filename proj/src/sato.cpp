#include "mgbccm/sato.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mgbccm/sdpc.hpp"

namespace mgbccm {

namespace {

void require_psd(const ComplexMatrix& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success ||
      solver.eigenvalues().minCoeff() < numeric_policy().psd_min_eig) {
    throw std::domain_error(std::string(what) + " is not positive semidefinite");
  }
}

void require_strict_interior(const NoiseCorrelation& rho) {
  if (std::abs(rho.rho) >= 1.0) {
    throw std::domain_error("noise correlation magnitude must be strictly below 1");
  }
}

double quad(const ComplexVector& v, const ComplexMatrix& m) {
  return std::real(v.dot(m * v));
}

}  // namespace

NoiseCorrelation::NoiseCorrelation(Complex rho_in) : rho(rho_in) {
  if (std::abs(rho) > 1.0 + 1e-12) {
    throw std::domain_error("noise correlation magnitude exceeds 1");
  }
}

NoiseCorrelation rho_canonical(const ChannelPair& ch, const ChannelParameters& params) {
  Complex hp = ch.h.dot(params.e1);  // x.dot(y) = x^H y
  Complex gp = ch.g.dot(params.e1);
  if (std::abs(hp) < 1e-12) {
    if (!params.degenerate) {
      throw std::domain_error("canonical correlation undefined: h^H e1 vanishes");
    }
    // collapsed channel: the quotient is the same along any direction with
    // nonzero projection; use h itself
    const ComplexVector e = ch.h.normalized();
    hp = ch.h.dot(e);
    gp = ch.g.dot(e);
  }
  Complex rho = gp / hp;
  if (std::abs(rho) > 1.0 + 1e-12) {
    throw std::runtime_error("canonical correlation magnitude " +
                             std::to_string(std::abs(rho)) + " exceeds 1");
  }
  if (std::abs(rho) > 1.0) rho /= std::abs(rho);
  return NoiseCorrelation(rho);
}

double f1_objective(const ChannelPair& ch, const NoiseCorrelation& rho,
                    const ComplexMatrix& k_x, Complex nu) {
  const ComplexVector w = ch.h - nu * ch.g;
  return quad(w, k_x) + 1.0 + std::norm(nu) - 2.0 * std::real(std::conj(nu) * rho.rho);
}

double f2_objective(const ChannelPair& ch, const NoiseCorrelation& rho,
                    const ComplexMatrix& k_x, Complex mu) {
  const ComplexVector w = ch.g - mu * ch.h;
  return quad(w, k_x) + 1.0 + std::norm(mu) - 2.0 * std::real(std::conj(mu) * std::conj(rho.rho));
}

MinimizedBound f1(const ChannelPair& ch, const NoiseCorrelation& rho,
                  const ComplexMatrix& k_x) {
  require_strict_interior(rho);
  require_psd(k_x, "K_X");
  const Complex cross = ch.g.dot(k_x * ch.h);  // g^H K h
  const Complex nu = (rho.rho + cross) / (1.0 + quad(ch.g, k_x));
  const double num = f1_objective(ch, rho, k_x, nu);
  return MinimizedBound{std::log2(num / (1.0 - std::norm(rho.rho))), nu};
}

MinimizedBound f2(const ChannelPair& ch, const NoiseCorrelation& rho,
                  const ComplexMatrix& k_x) {
  require_strict_interior(rho);
  require_psd(k_x, "K_X");
  const Complex cross = ch.h.dot(k_x * ch.g);  // h^H K g
  const Complex mu = (std::conj(rho.rho) + cross) / (1.0 + quad(ch.h, k_x));
  const double num = f2_objective(ch, rho, k_x, mu);
  return MinimizedBound{std::log2(num / (1.0 - std::norm(rho.rho))), mu};
}

std::vector<OuterBoundPoint> outer_region(const ChannelPair& ch, const NoiseCorrelation& rho,
                                          double trace_budget,
                                          std::span<const ComplexMatrix> family) {
  require_strict_interior(rho);
  std::vector<OuterBoundPoint> points;
  points.reserve(family.size());
  for (const ComplexMatrix& k : family) {
    require_psd(k, "K_X");
    if (k.trace().real() > trace_budget + numeric_policy().trace_tol) {
      throw std::domain_error("covariance trace exceeds the budget");
    }
    const MinimizedBound b1 = f1(ch, rho, k);
    const MinimizedBound b2 = f2(ch, rho, k);
    points.push_back(OuterBoundPoint{rho.rho, k, std::max(0.0, b1.value),
                                     std::max(0.0, b2.value), b1.minimizer, b2.minimizer});
  }
  return points;
}

std::vector<ComplexMatrix> random_covariance_family(Eigen::Index t, double trace, int count,
                                                    unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<ComplexMatrix> family;
  family.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    ComplexMatrix x(t, t);
    for (Eigen::Index i = 0; i < t; ++i) {
      for (Eigen::Index j = 0; j < t; ++j) {
        x(i, j) = Complex(gauss(rng), gauss(rng));
      }
    }
    ComplexMatrix k_x = x * x.adjoint();
    k_x *= trace / k_x.trace().real();
    // exact-Hermitian storage
    for (Eigen::Index i = 0; i < t; ++i) {
      k_x(i, i) = Complex(k_x(i, i).real(), 0.0);
      for (Eigen::Index j = i + 1; j < t; ++j) {
        const Complex v = 0.5 * (k_x(i, j) + std::conj(k_x(j, i)));
        k_x(i, j) = v;
        k_x(j, i) = std::conj(v);
      }
    }
    family.push_back(std::move(k_x));
  }
  return family;
}

double alpha_slice_residual(const ChannelPair& ch, const ChannelParameters& params,
                            const ComplexMatrix& k_x, double alpha) {
  const Complex rho = rho_canonical(ch, params).rho;
  const ComplexVector w = ch.h - rho * gamma1(ch, params, alpha) * ch.g;
  const ComplexMatrix diff = k_x - (alpha * ch.power) * hermitian_outer(params.e1);
  return std::real(w.dot(diff * w));
}

AlphaAssignment alpha_for_covariance(const ChannelPair& ch, const ChannelParameters& params,
                                     const ComplexMatrix& k_x) {
  require_psd(k_x, "K_X");
  if (k_x.trace().real() > ch.power + numeric_policy().trace_tol) {
    throw std::domain_error("covariance trace exceeds the power budget");
  }
  const auto& pol = numeric_policy();
  auto L = [&](double a) { return alpha_slice_residual(ch, params, k_x, a); };

  const double l0 = L(0.0);
  const double l1 = L(1.0);
  if (l0 < -pol.root_sign_slack || l1 > pol.root_sign_slack) {
    throw std::runtime_error("alpha assignment: endpoint signs violate the bracket (L(0)=" +
                             std::to_string(l0) + ", L(1)=" + std::to_string(l1) + ")");
  }

  // scan uniform cells left to right; accept an early near-zero, otherwise
  // bisect inside the first sign-change cell
  const int cells = pol.root_scan_cells;
  double lo = 0.0, hi = 1.0, flo = l0;
  bool bracketed = false;
  for (int i = 0; i <= cells; ++i) {
    const double a = static_cast<double>(i) / cells;
    const double v = (i == 0) ? l0 : (i == cells ? l1 : L(a));
    if (std::abs(v) <= pol.root_residual) {
      return AlphaAssignment{k_x, a, v};
    }
    if (i > 0 && ((flo > 0.0) != (v > 0.0))) {
      lo = static_cast<double>(i - 1) / cells;
      hi = a;
      bracketed = true;
      break;
    }
    flo = v;
  }
  if (!bracketed) {
    // endpoints straddle zero even when no interior cell flipped
    lo = 0.0;
    hi = 1.0;
    flo = l0;
  }

  double root = 0.5 * (lo + hi), val = L(root);
  const double sign_lo = (flo >= 0.0) ? 1.0 : -1.0;
  for (int it = 0; it < pol.root_max_bisect && std::abs(val) > pol.root_residual; ++it) {
    if ((val >= 0.0) == (sign_lo >= 0.0)) {
      lo = root;
    } else {
      hi = root;
    }
    root = 0.5 * (lo + hi);
    val = L(root);
  }
  if (std::abs(val) > pol.root_residual) {
    throw std::runtime_error("alpha assignment: bisection stalled with |L| = " +
                             std::to_string(std::abs(val)));
  }
  return AlphaAssignment{k_x, root, val};
}

ConverseReport verify_converse_identities(const ChannelPair& ch,
                                          const ChannelParameters& params, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("converse identities are checked on interior alpha");
  }
  const auto& pol = numeric_policy();
  ConverseReport report;
  report.alpha = alpha;

  const double g1 = gamma1(ch, params, alpha);
  const auto [g2, c2] = gamma2(ch, params, alpha);
  const Complex rho = rho_canonical(ch, params).rho;
  const HermitianPencil p2 = gamma2_pencil(ch, params, alpha);

  // (a) smallest eigenvalue of the split pencil is gamma1/lambda1, with e1
  //     as its eigenvector
  const GenEigResult small = smallest_gen_eig(p2);
  const double expect = g1 / params.lambda1;
  report.items.push_back({"pencil2-smallest-eigenvalue",
                          std::abs(small.value - expect) <= pol.identity_rel * expect,
                          std::abs(small.value - expect) / expect});
  const double align = std::abs(small.vector.dot(params.e1));
  report.items.push_back({"pencil2-smallest-eigenvector", 1.0 - align <= pol.alignment_tol,
                          1.0 - align});

  // (b) the user-2 beam is the unit vector along g - rho* gamma2 h, and the
  //     two frontier beams are orthogonal
  const ComplexVector w2 = ch.g - std::conj(rho) * g2 * ch.h;
  const double w2n = w2.norm();
  const double beam_align = (w2n > 0.0) ? std::abs((w2 / w2n).dot(c2)) : 0.0;
  report.items.push_back({"beam2-matches-eigenvector", 1.0 - beam_align <= pol.alignment_tol,
                          1.0 - beam_align});
  const ComplexVector w1 = ch.h - rho * g1 * ch.g;
  const double orth = std::abs(w1.dot(w2));
  report.items.push_back({"beam-orthogonality", orth <= pol.orthogonality_abs, orth});

  // (c) power identity: (1-a) P zeta + a P eta = (gamma2 - 1)(1 - gamma2 |rho|^2)
  const double zeta = w2.squaredNorm();
  const double eta = zeta * std::norm(params.e1.dot(c2));
  const double lhs = (1.0 - alpha) * ch.power * zeta + alpha * ch.power * eta;
  const double rhs = (g2 - 1.0) * (1.0 - g2 * std::norm(rho));
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  report.items.push_back({"noise-power-identity",
                          std::abs(lhs - rhs) <= pol.identity_rel * scale,
                          std::abs(lhs - rhs) / scale});

  // (d) e1 is orthogonal to c2 under both pencil matrices
  const double a_orth = std::abs(params.e1.dot(p2.a * c2));
  const double b_orth = b_orthogonality_check(p2, params.e1, c2);
  report.items.push_back({"eigenvector-a-orthogonality", a_orth <= pol.orthogonality_abs, a_orth});
  report.items.push_back({"eigenvector-b-orthogonality", b_orth <= pol.orthogonality_abs, b_orth});

  report.pass = true;
  for (const auto& item : report.items) report.pass = report.pass && item.pass;
  return report;
}

CoincidenceReport coincidence_check(const ChannelPair& ch, int n_alpha) {
  if (n_alpha < 1) throw std::domain_error("coincidence grid needs at least 1 point");
  const ChannelParameters params = channel_parameters(ch);

  CoincidenceReport report;
  report.n_alpha = n_alpha;
  if (params.degenerate || params.lambda1 == 1.0) {
    report.degenerate = true;
    report.pass = true;  // nothing to compare: the region is a single point
    return report;
  }

  const NoiseCorrelation rho = rho_canonical(ch, params);
  for (int i = 0; i < n_alpha; ++i) {
    const double a = static_cast<double>(i + 1) / (n_alpha + 1);  // interior grid
    const CovariancePair cov = build_covariances(ch, params, a);
    const double inner1 = std::log2(gamma1(ch, params, a));
    const double inner2 = std::log2(gamma2(ch, params, a).first);
    const double outer1 = f1(ch, rho, cov.k_x).value;
    const double outer2 = f2(ch, rho, cov.k_x).value;
    report.max_f1_gap = std::max(report.max_f1_gap, std::abs(outer1 - inner1));
    report.max_f2_gap = std::max(report.max_f2_gap, std::abs(outer2 - inner2));
  }
  const double tol = numeric_policy().coincidence_abs;
  report.pass = report.max_f1_gap <= tol && report.max_f2_gap <= tol;
  return report;
}

}  // namespace mgbccm
