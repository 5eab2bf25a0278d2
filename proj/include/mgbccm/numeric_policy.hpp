#pragma once

namespace mgbccm {

/// Numeric tolerances used across the library. A single mutable record so a
/// caller can tighten or relax everything in one place; the defaults are the
/// contract the test suites pin down.
struct NumericPolicy {
  // eigensolver contracts
  double eig_residual_rel = 1e-10;    // ||A e - lambda B e|| <= rel * (||A|| + |lambda| ||B||)
  double eig_imag_rel = 1e-12;        // imaginary residue allowed in a Rayleigh quotient
  double unit_norm_tol = 1e-12;       // | ||e|| - 1 |
  double cross_check_rel = 1e-8;      // dense path vs closed-form span path
  double degenerate_eig_tol = 1e-12;  // |lambda - 1| below this collapses to the floor

  // matrix structure
  double cholesky_min_pivot = 1e-12;  // positive-definite acceptance per pivot
  double hermitian_tol = 1e-12;       // relative asymmetry allowed before rejection
  double psd_min_eig = -1e-10;        // PSD acceptance on the smallest eigenvalue
  double gram_det_tol = 1e-12;        // linear-independence determinant threshold

  // identity checks
  double identity_rel = 1e-9;         // relative residual for algebraic identities
  double orthogonality_abs = 1e-10;   // absolute inner-product residual
  double alignment_tol = 1e-8;        // 1 - |<u, v>| for unit vectors matching up to phase
  double trace_tol = 1e-9;            // power-constraint slack

  // region machinery
  double mono_slack = 1e-12;          // allowed backward step in a monotone sequence
  double coincidence_abs = 1e-8;      // inner vs outer frontier, bits

  // root finding
  double root_residual = 1e-8;        // |L| acceptance at the returned root
  int root_max_bisect = 60;
  int root_scan_cells = 64;
  double root_sign_slack = 1e-10;     // endpoint sign assumption slack
};

NumericPolicy& numeric_policy();

}  // namespace mgbccm
