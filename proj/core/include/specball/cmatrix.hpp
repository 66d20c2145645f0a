#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "specball/cpoly.hpp"

namespace specball {

/// Dense n x n complex matrix. Row-major semantic order applies at the JSON
/// boundary; in-memory layout is Eigen's.
using ComplexMatrix = Eigen::MatrixXcd;

struct EigenvalueRecord {
  Complex lambda;
  int alg_mult = 0;    // n(lambda): dimension of the stable subspace
  int nilpotence = 0;  // m(lambda): nilpotence order of the lambda part
};

/// Jordan-structure data of a matrix. F0/d are the zero-column set and the
/// perturbation degrees of a nilpotent Jordan matrix; they are filled by
/// f0_and_d and left empty by jordan_profile.
struct JordanProfile {
  std::vector<EigenvalueRecord> eigenvalues;
  bool cyclic = false;
  std::vector<int> f0;
  std::vector<int> d;
};

struct JordanBlockSpec {
  Complex lambda;
  int size = 1;
};

/// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier trace
/// recursion; monic of degree n.
Polynomial char_poly(const ComplexMatrix& m);

/// Roots of the characteristic polynomial, with multiplicity.
std::vector<Complex> eigenvalues(const ComplexMatrix& m, double tol = 1e-12);

double spectral_radius(const ComplexMatrix& m);

/// Rank by full-pivot elimination, counting pivots above
/// rel_threshold * (Frobenius norm).
int numerical_rank(const ComplexMatrix& m, double rel_threshold = 1e-9);

/// Eigenvalue clusters (radius cluster_tol) with n(lambda) from cluster size
/// and m(lambda) from the first power of (M - lambda I) whose numerical rank
/// drops to n - n(lambda). Clusters must be separated by more than
/// 10 * cluster_tol or a NumericalError names the offending gap.
JordanProfile jordan_profile(const ComplexMatrix& m, double cluster_tol = 1e-6);

/// Jordan matrix for the given blocks; within each eigenvalue blocks are
/// placed in decreasing size order (the decreasing-gap convention).
ComplexMatrix jordan_build(std::vector<JordanBlockSpec> blocks);

/// Block sizes of a matrix that is already in Jordan form (diagonal plus 0/1
/// superdiagonal entries between equal diagonal values). Throws
/// invalid_argument otherwise; general matrices must be conjugated to Jordan
/// form by the caller.
std::vector<JordanBlockSpec> read_jordan_blocks(const ComplexMatrix& m);

struct NilpotentStructure {
  std::vector<int> f0;  // 1-based zero-column indices b_1 < ... < b_(n-r)
  std::vector<int> d;   // d_i = 1 + #(F0 n [n-i+2 .. n]), i = 1..n
  int m = 0;            // nilpotence order, b_2 - b_1
  bool estdi_ok = false;  // m * d_i >= i for all i
};

/// Zero-column set F0 and the degrees d_i of the lowest-order terms of
/// sigma_i(V + A); input must be a nilpotent Jordan matrix honoring the
/// decreasing-gap convention.
NilpotentStructure f0_and_d(const ComplexMatrix& v);

/// The spectral-ball automorphism M |-> (lambda0 I - M)(I - conj(lambda0) M)^(-1).
/// Involutive; moves eigenvalue lambda0 to 0. Requires |lambda0| < 1 and
/// I - conj(lambda0) M invertible.
ComplexMatrix mobius(const ComplexMatrix& m, Complex lambda0);

/// Scalar form of the same automorphism, for spectrum bookkeeping.
Complex mobius_scalar(Complex z, Complex lambda0);

}  // namespace specball
