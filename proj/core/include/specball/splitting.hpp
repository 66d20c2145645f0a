#pragma once

#include <vector>

#include "specball/cmatrix.hpp"
#include "specball/cpoly.hpp"

namespace specball {

/// Holomorphic factorization P_M = p0 * p1 where p0 carries the n0
/// eigenvalues enclosed by the contour |zeta - center| = delta.
struct SplitResult {
  double delta = 0.0;
  int n0 = 0;
  SymCoeffs sigma0;             // elementary symmetric functions of the enclosed roots
  Polynomial p0;                // degree n0
  Polynomial p1;                // degree n - n0
  double factor_residual = 0.0; // max coefficient deviation of p0*p1 from char_poly
};

/// Conjugation P M P^(-1) = diag(M0, M1) aligned with the reference
/// splitting C^n0 x C^(n-n0).
struct BlockDiag {
  ComplexMatrix P;
  ComplexMatrix M0;
  ComplexMatrix M1;
  double offdiag_residual = 0.0;
};

/// Contour radius separating the eigenvalue cluster at `target` from the
/// rest of the spectrum: the geometric mean of the largest inner and the
/// smallest outer distance. Fails when no gap of at least 10*tol exists or
/// when every eigenvalue would be enclosed.
double choose_delta(const ComplexMatrix& m, Complex target, double tol = 1e-12);

/// Power sums Sigma_0..Sigma_kmax of the eigenvalues inside the contour,
/// via trapezoidal quadrature of zeta^k P'(zeta)/P(zeta) with adaptive node
/// doubling (start at `nodes`, stop when successive estimates agree to 1e-10).
/// Sigma_0 must round to an integer or the contour is rejected.
std::vector<Complex> contour_power_sums(const ComplexMatrix& m, Complex center, double delta,
                                        int kmax, int nodes = 256);

/// Local factor P^0 of the characteristic polynomial from contour power sums
/// and Newton conversion; p1 by synthetic division.
SplitResult local_factor(const ComplexMatrix& m, Complex center, double delta);

/// Spectral projector pi_0 by resolvent quadrature, then a basis aligned
/// with the reference splitting (pi_0 applied to the leading coordinate
/// basis, Gram-Schmidt orthonormalized). Fails when pi_0 is not numerically
/// idempotent.
BlockDiag block_diagonalize(const ComplexMatrix& m, Complex center, double delta);

}  // namespace specball
