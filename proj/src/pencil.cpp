#include "mgbccm/pencil.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgbccm {

namespace {

void require_square_same_size(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("pencil: matrices must be square and of equal size");
  }
  if (a.rows() < 1) throw std::invalid_argument("pencil: empty matrices");
}

ComplexMatrix symmetrize(const ComplexMatrix& m, const char* what) {
  const double scale = m.norm();
  const double asym = (m - m.adjoint()).norm();
  if (asym > numeric_policy().hermitian_tol * std::max(1.0, scale)) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian (asymmetry " +
                                std::to_string(asym) + ")");
  }
  ComplexMatrix out = m;
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = Complex(m(i, i).real(), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

int count_ties(const Eigen::VectorXd& values, double extreme) {
  const double tol = 1e-9 * std::max(1.0, std::abs(extreme));
  int n = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i] - extreme) <= tol) ++n;
  }
  return n;
}

GenEigResult finalize(double value, ComplexVector vec, int multiplicity,
                      const HermitianPencil& pencil) {
  vec.normalize();
  vec = apply_phase_convention(std::move(vec));

  const auto& pol = numeric_policy();
  const double residual = (pencil.a * vec - value * (pencil.b * vec)).norm();
  const double bound = pol.eig_residual_rel *
                       (pencil.a.norm() + std::abs(value) * pencil.b.norm());
  if (residual > bound) {
    throw std::runtime_error("pencil: eigenpair residual " + std::to_string(residual) +
                             " exceeds contract bound " + std::to_string(bound));
  }
  if (std::abs(vec.norm() - 1.0) > pol.unit_norm_tol) {
    throw std::runtime_error("pencil: eigenvector normalization drift");
  }
  return GenEigResult{value, std::move(vec), multiplicity};
}

}  // namespace

ComplexMatrix hermitian_outer(const ComplexVector& v) {
  const Eigen::Index n = v.size();
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = Complex(std::norm(v[i]), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex e = v[i] * std::conj(v[j]);
      m(i, j) = e;
      m(j, i) = std::conj(e);
    }
  }
  return m;
}

ComplexMatrix identity_plus_scaled_outer(double scale, const ComplexVector& v) {
  ComplexMatrix m = scale * hermitian_outer(v);
  m.diagonal().array() += 1.0;
  return m;
}

int cholesky_failing_pivot(const ComplexMatrix& b) {
  const Eigen::Index n = b.rows();
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = b(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > numeric_policy().cholesky_min_pivot)) return static_cast<int>(j);
    const double root = std::sqrt(d);
    l(j, j) = root;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Complex s = b(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / root;
    }
  }
  return -1;
}

HermitianPencil::HermitianPencil(ComplexMatrix a_in, ComplexMatrix b_in)
    : a(), b() {
  require_square_same_size(a_in, b_in);
  a = symmetrize(a_in, "pencil A");
  b = symmetrize(b_in, "pencil B");
  const int pivot = cholesky_failing_pivot(b);
  if (pivot >= 0) {
    throw std::invalid_argument("pencil: B is not positive definite (pivot " +
                                std::to_string(pivot) + " <= " +
                                std::to_string(numeric_policy().cholesky_min_pivot) + ")");
  }
}

ComplexVector apply_phase_convention(ComplexVector v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best) {
      best = mag;
      imax = i;
    }
  }
  if (best <= 0.0) return v;
  const Complex rot = std::conj(v[imax]) / best;
  v *= rot;
  v[imax] = Complex(v[imax].real(), 0.0);
  return v;
}

GenEigResult largest_gen_eig(const HermitianPencil& pencil) {
  Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> solver(
      pencil.a, pencil.b, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pencil: generalized eigensolver failed");
  }
  const Eigen::Index last = solver.eigenvalues().size() - 1;
  const double value = solver.eigenvalues()[last];
  return finalize(value, solver.eigenvectors().col(last),
                  count_ties(solver.eigenvalues(), value), pencil);
}

GenEigResult smallest_gen_eig(const HermitianPencil& pencil) {
  Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> solver(
      pencil.a, pencil.b, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pencil: generalized eigensolver failed");
  }
  const double value = solver.eigenvalues()[0];
  return finalize(value, solver.eigenvectors().col(0),
                  count_ties(solver.eigenvalues(), value), pencil);
}

double rayleigh_quotient(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexVector& c) {
  if (c.size() == 0 || c.norm() == 0.0) {
    throw std::domain_error("rayleigh_quotient: zero vector");
  }
  if (cholesky_failing_pivot(b) >= 0) {
    throw std::invalid_argument("rayleigh_quotient: B is not positive definite");
  }
  const Complex num = c.dot(a * c);  // Eigen's dot conjugates the left argument
  const Complex den = c.dot(b * c);
  const Complex q = num / den;
  if (std::abs(q.imag()) > numeric_policy().eig_imag_rel * std::max(1.0, std::abs(q.real()))) {
    throw std::runtime_error("rayleigh_quotient: non-real quotient, imag " +
                             std::to_string(q.imag()));
  }
  return q.real();
}

double b_orthogonality_check(const HermitianPencil& pencil,
                             const ComplexVector& e_i, const ComplexVector& e_j) {
  return std::abs(e_i.dot(pencil.b * e_j));
}

SpanPencilEigs rank_one_update_eigs(double sa, const ComplexVector& u,
                                    double sb, const ComplexVector& v) {
  if (u.size() != v.size() || u.size() < 1) {
    throw std::invalid_argument("rank_one_update_eigs: size mismatch");
  }
  const Eigen::Index t = u.size();
  const double un = u.norm();
  if (un == 0.0) throw std::invalid_argument("rank_one_update_eigs: zero u");

  // orthonormal basis {b1, b2} of span{u, v}
  ComplexVector b1 = u / un;
  ComplexVector w = v - b1.dot(v) * b1;
  const bool one_dimensional = w.norm() <= 1e-14 * std::max(1.0, v.norm());

  auto quotient_of = [&](const ComplexVector& c) {
    const double na = 1.0 + sa * std::norm(u.dot(c));
    const double nb = 1.0 + sb * std::norm(v.dot(c));
    return na / nb;
  };

  SpanPencilEigs out;
  if (one_dimensional) {
    // spectrum: quotient along u, plus eigenvalue 1 on the orthogonal complement
    const double q = quotient_of(b1);
    if (q >= 1.0) {
      out.value_max = q;
      out.vector_max = apply_phase_convention(b1);
      out.value_min = 1.0;
      out.vector_min = ComplexVector();
    } else {
      out.value_min = q;
      out.vector_min = apply_phase_convention(b1);
      out.value_max = 1.0;
      out.vector_max = ComplexVector();
    }
    if (t == 1) {
      out.value_max = out.value_min = q;
      out.vector_max = out.vector_min = apply_phase_convention(b1);
    }
    return out;
  }

  ComplexVector b2 = w / w.norm();

  // 2x2 restriction of (I + sa u u^H, I + sb v v^H) to span{b1, b2}
  const Complex ub1 = u.dot(b1), ub2 = u.dot(b2);
  const Complex vb1 = v.dot(b1), vb2 = v.dot(b2);
  const double a11 = 1.0 + sa * std::norm(ub1);
  const double a22 = 1.0 + sa * std::norm(ub2);
  const Complex a12 = sa * std::conj(ub1) * ub2;
  const double b11 = 1.0 + sb * std::norm(vb1);
  const double b22 = 1.0 + sb * std::norm(vb2);
  const Complex b12 = sb * std::conj(vb1) * vb2;

  // det(As - lambda Bs) = 0: c2 lambda^2 - c1 lambda + c0 = 0
  const double c2 = b11 * b22 - std::norm(b12);
  const double c1 = a11 * b22 + a22 * b11 - 2.0 * (a12 * std::conj(b12)).real();
  const double c0 = a11 * a22 - std::norm(a12);
  const double disc = std::max(0.0, c1 * c1 - 4.0 * c2 * c0);
  const double sq = std::sqrt(disc);
  const double lam_hi = (c1 + sq) / (2.0 * c2);
  const double lam_lo = c0 / (c2 * lam_hi);  // product of roots = c0 / c2

  auto lift = [&](double lam) {
    // nullspace of (As - lam Bs): pick the better-conditioned row
    const Complex r1x = a11 - lam * b11, r1y = a12 - lam * b12;
    const Complex r2x = std::conj(a12) - lam * std::conj(b12), r2y = a22 - lam * b22;
    Complex wx, wy;
    if (std::abs(r1x) + std::abs(r1y) >= std::abs(r2x) + std::abs(r2y)) {
      wx = r1y;
      wy = -r1x;
    } else {
      wx = r2y;
      wy = -r2x;
    }
    ComplexVector e = wx * b1 + wy * b2;
    const double n = e.norm();
    if (n == 0.0) e = b1;  // degenerate tie: any span vector is an eigenvector
    else e /= n;
    return apply_phase_convention(std::move(e));
  };

  out.value_max = std::max(lam_hi, lam_lo);
  out.value_min = std::min(lam_hi, lam_lo);
  out.vector_max = lift(out.value_max);
  out.vector_min = lift(out.value_min);

  // ambient eigenvalue 1 (multiplicity t - 2) can be the extremum
  if (t > 2) {
    if (out.value_max < 1.0) {
      out.value_max = 1.0;
      out.vector_max = ComplexVector();
    }
    if (out.value_min > 1.0) {
      out.value_min = 1.0;
      out.vector_min = ComplexVector();
    }
  }
  return out;
}

}  // namespace mgbccm
