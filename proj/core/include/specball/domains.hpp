#pragma once

#include <cstdint>
#include <vector>

#include "specball/cmatrix.hpp"
#include "specball/cpoly.hpp"

namespace specball {

/// A point of C^n regarded as sigma-coordinates of the symmetrized polydisk.
/// Membership in G_n is a predicate, not a type invariant.
struct GPoint {
  int n = 0;
  std::vector<Complex> z;
};

/// The map sigma: M |-> (sigma_1(M), ..., sigma_n(M)), read off the
/// characteristic polynomial through t^n + sum_j (-1)^j sigma_j t^(n-j).
GPoint sigma(const ComplexMatrix& m);

/// The monic polynomial P_z attached to a point of C^n (same sign convention).
Polynomial poly_from_gpoint(const GPoint& z);

/// Three-valued membership; root-modulus tests near the unit circle are
/// ill-conditioned, so a boundary band of width tol is reported explicitly.
enum class Membership { kInside, kBoundary, kOutside };

Membership in_spectral_ball(const ComplexMatrix& m, double tol = 1e-8);
Membership in_symmetrized_polydisk(const GPoint& z, double tol = 1e-8);

/// sigma images of n independent unimodular numbers, i.e. points of the
/// Shilov boundary sigma(T^n). Deterministic in (seed, index), index-strided.
std::vector<GPoint> shilov_sample(int n, int count, std::uint64_t seed);

struct BallRadii {
  double inradius = 0.0;      // certified: B(0, inradius*(1-1e-3)) subset G_n
  double circumradius = 0.0;  // max ||z|| over Shilov samples, locally maximized
};

/// Inner/outer ball estimates for G_n used by the Green-function squeeze.
/// The circumradius is a refined sample maximum; the inradius starts from the
/// sample minimum and is shrunk until a dense direction grid certifies the
/// inner ball. Requires samples >= 1000.
BallRadii ball_radii(int n, int samples, std::uint64_t seed);

/// Largest grid-certified radius s with B(center, s*(1-1e-3)) inside G_n;
/// the squeeze bound at a pole away from the origin needs this. Starts from
/// the distance of the center to the Shilov samples and shrinks on failure.
double certified_ball_at(const GPoint& center, int samples, std::uint64_t seed);

}  // namespace specball
