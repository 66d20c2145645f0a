#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specball/cmatrix.hpp"
#include "specball/domains.hpp"

namespace specball {

/// Least-squares slope of max-over-angles values of h against log radius.
/// This is how every O(1) estimate of the theory is operationalized: the
/// exponent is the content, the constant is not.
struct ExponentFit {
  std::vector<double> radii;
  int angles_per_radius = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// A two-sided sandwich for a Green-function value; lower <= upper whenever
/// both are finite and refer to the same pole/point pair.
struct GreenBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// The radii {1e-1, ..., 1e-6} used by default in all slope fits.
std::vector<double> default_fit_radii();

/// Perturbation direction with a single unit entry at row m, column 1, for a
/// nilpotent Jordan V with nilpotence order m. Then
/// char_poly(V + zeta X) = (t^m - zeta) t^(n-m) exactly.
ComplexMatrix make_remark_X(const ComplexMatrix& v);

/// Companion matrix of t^n - 1 (the cyclic shift); sigma_i = 0 for i < n,
/// sigma_n = (-1)^(n-1), spectrum = all n-th roots of unity.
ComplexMatrix make_roots_of_unity_X(int n);

/// Companion matrix of a seeded monic polynomial with sigma_1..sigma_m = 0
/// and distinct, nonzero, well-separated roots; ||sigma(zeta X)|| then has
/// leading order |zeta|^(m+1). Requires 1 <= m <= n-1.
ComplexMatrix make_gap_X(int n, int m, std::uint64_t seed);

/// For each radius r takes the max of h over `angles` equispaced points
/// zeta = r e^(i theta) (global phase offset drawn from the seed), then fits
/// value against log r. h must be finite on the sample set.
ExponentFit exponent_fit(const std::function<double(Complex)>& h,
                         const std::vector<double>& radii, int angles, std::uint64_t seed);

/// Lower bound m * log rho(M) for g_Omega(V, M), V nilpotent with nilpotence
/// order m. Returns -infinity when rho(M) = 0.
double green_lower_omega_nilpotent(int m, const ComplexMatrix& m_point);

/// General-pole path: m0 * log rho0(M) where rho0 is the largest root modulus
/// of the local factor p0 extracted by contour splitting around `center`.
double green_lower_omega_split(int m0, const ComplexMatrix& m_point, Complex center,
                               double delta);

/// Upper bound log|zeta| for g_Omega(V, V + zeta X) from the analytic disc
/// w |-> V + w X; validity (the disc staying in Omega_n) is checked on a
/// circle grid of |w| = |zeta|. Returns -infinity for zeta = 0.
double lempert_upper_disc(const ComplexMatrix& v, const ComplexMatrix& x, Complex zeta,
                          int circle_points = 64);

/// Ball-monotonicity squeeze for g_{G_n}(0, z) from B(0,r) c G_n c B(0,R):
/// (log(||z||/R), log(||z||/r)). Requires ||z|| < r.
GreenBounds green_squeeze_gn(const GPoint& z, double r, double R);

struct Theorem2Config {
  std::vector<double> radii = default_fit_radii();
  int angles = 16;
  std::uint64_t seed = 1;
  int shilov_samples = 2000;
};

/// Numerical verdict on the exponent gap at a derogatory pole.
struct Theorem2Report {
  JordanProfile profile;   // of the input Jordan matrix
  bool cyclic = false;
  Complex lambda0;         // selected eigenvalue
  int m0 = 0;              // m(lambda0)
  int n0 = 0;              // n(lambda0)
  int gap = 0;             // n0 - m0 (>= 1 in every derogatory case)
  double mobius_char_residual = 0.0;  // reduced form vs matrix Moebius image
  ExponentFit omega_lower_fit;        // green lower bound along the remark-X curve
  double omega_bound_exponent = 0.0;  // its fitted slope; <= m0 always
  double pinch_max_abs = 0.0;         // max |lower bound - log|zeta|| on the grid
  ExponentFit g_side_fit;             // squeeze/displacement fit along the unity-X curve
  double slope_G = 0.0;               // its fitted slope; expected n0
  double side_gap_x_slope = 0.0;      // ||sigma(zeta X_gap)|| exponent, fully nilpotent case only
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  std::string omega_construction;
  std::string g_construction;
  std::string note;
};

/// Runs the whole §-by-§ exponent comparison at the pole V (must be in
/// Jordan form and inside the spectral ball): picks a derogatory eigenvalue,
/// reduces it to 0 by the Moebius automorphism, fits the computable bounds on
/// both sides, and reports the integer gap. For a cyclic pole the report
/// states cyclicity and shows the pinched remark-X fit on both sides instead.
Theorem2Report theorem2_report(const ComplexMatrix& v, const Theorem2Config& config = {});

}  // namespace specball
