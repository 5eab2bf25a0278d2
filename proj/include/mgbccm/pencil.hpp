#pragma once

#include <Eigen/Dense>
#include <complex>

#include "mgbccm/numeric_policy.hpp"

namespace mgbccm {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// v v^H with exact conjugate symmetry (real diagonal, mirrored off-diagonals).
ComplexMatrix hermitian_outer(const ComplexVector& v);

/// I + scale * v v^H, exact-Hermitian by construction.
ComplexMatrix identity_plus_scaled_outer(double scale, const ComplexVector& v);

/// Index of the first Cholesky pivot of b that falls at or below
/// numeric_policy().cholesky_min_pivot, or -1 if b is positive definite.
int cholesky_failing_pivot(const ComplexMatrix& b);

/// Matrix pair (A, B) with A Hermitian and B Hermitian positive definite.
/// Construction validates both structure and definiteness; inputs are
/// symmetrized so stored matrices are exactly Hermitian.
struct HermitianPencil {
  ComplexMatrix a;
  ComplexMatrix b;

  HermitianPencil(ComplexMatrix a_in, ComplexMatrix b_in);
};

/// One generalized eigenpair. The vector is unit-norm under the deterministic
/// phase convention (component of largest magnitude rotated to the positive
/// real axis). `multiplicity` counts eigenvalues numerically tied with
/// `value`, so callers can detect a non-unique extremal eigenspace.
struct GenEigResult {
  double value = 0.0;
  ComplexVector vector;
  int multiplicity = 1;
};

/// Rotate v so its largest-magnitude component is real positive.
ComplexVector apply_phase_convention(ComplexVector v);

GenEigResult largest_gen_eig(const HermitianPencil& pencil);
GenEigResult smallest_gen_eig(const HermitianPencil& pencil);

/// (c^H a c) / (c^H b c); throws std::domain_error on a zero vector and
/// rejects quotients with a non-negligible imaginary residue.
double rayleigh_quotient(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexVector& c);

/// |e_i^H B e_j|; callers assert this is small for eigenvectors of distinct
/// eigenvalues.
double b_orthogonality_check(const HermitianPencil& pencil,
                             const ComplexVector& e_i, const ComplexVector& e_j);

/// Closed-form eigenpairs of the pencil (I + sa u u^H, I + sb v v^H).
/// Every eigenvector for an eigenvalue different from 1 lies in span{u, v},
/// so the problem reduces to a 2x2 solve in an orthonormal basis of that
/// span. Used as an independent cross-check of the dense path.
struct SpanPencilEigs {
  double value_max = 1.0;
  double value_min = 1.0;
  ComplexVector vector_max;
  ComplexVector vector_min;
};

SpanPencilEigs rank_one_update_eigs(double sa, const ComplexVector& u,
                                    double sb, const ComplexVector& v);

}  // namespace mgbccm
