#include "specball/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specball/rng.hpp"

namespace specball {

double detail_shrink_certify(const GPoint& center, double r0, int directions, std::uint64_t seed);

GPoint sigma(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  const Polynomial p = char_poly(m);
  GPoint out;
  out.n = n;
  out.z.resize(static_cast<std::size_t>(n));
  double sign = -1.0;
  for (int j = 1; j <= n; ++j) {
    out.z[static_cast<std::size_t>(j - 1)] = sign * p[n - j];
    sign = -sign;
  }
  return out;
}

Polynomial poly_from_gpoint(const GPoint& z) {
  return poly_from_sym(SymCoeffs{z.n, z.z});
}

namespace {

Membership classify(double max_modulus, double tol) {
  if (std::abs(max_modulus - 1.0) <= tol) return Membership::kBoundary;
  return max_modulus < 1.0 ? Membership::kInside : Membership::kOutside;
}

}  // namespace

Membership in_spectral_ball(const ComplexMatrix& m, double tol) {
  return classify(spectral_radius(m), tol);
}

Membership in_symmetrized_polydisk(const GPoint& z, double tol) {
  double max_mod = 0.0;
  for (const Complex& r : roots(poly_from_gpoint(z))) max_mod = std::max(max_mod, std::abs(r));
  return classify(max_mod, tol);
}

namespace {

GPoint shilov_point(int n, std::uint64_t seed, std::uint64_t index) {
  std::vector<Complex> lambdas(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const double th = rng::angle(seed, index, static_cast<std::uint64_t>(c));
    lambdas[static_cast<std::size_t>(c)] = Complex(std::cos(th), std::sin(th));
  }
  const SymCoeffs s = elem_sym(lambdas);
  return GPoint{n, s.values};
}

double norm2(const std::vector<Complex>& z) {
  double acc = 0.0;
  for (const Complex& c : z) acc += std::norm(c);
  return std::sqrt(acc);
}

GPoint point_from_angles(int n, const std::vector<double>& angles) {
  std::vector<Complex> lambdas(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    lambdas[static_cast<std::size_t>(c)] =
        Complex(std::cos(angles[static_cast<std::size_t>(c)]),
                std::sin(angles[static_cast<std::size_t>(c)]));
  const SymCoeffs s = elem_sym(lambdas);
  return GPoint{n, s.values};
}

}  // namespace

std::vector<GPoint> shilov_sample(int n, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("shilov_sample: count must be >= 1");
  std::vector<GPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(shilov_point(n, seed, static_cast<std::uint64_t>(i)));
  return out;
}

BallRadii ball_radii(int n, int samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("ball_radii: samples must be >= 1000");

  double rmin = std::numeric_limits<double>::infinity();
  double rmax = 0.0;
  std::vector<double> best_angles;
  for (int i = 0; i < samples; ++i) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      angles[static_cast<std::size_t>(c)] =
          rng::angle(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(c));
    const double norm = norm2(point_from_angles(n, angles).z);
    rmin = std::min(rmin, norm);
    if (norm > rmax) {
      rmax = norm;
      best_angles = angles;
    }
  }

  // Refine the circumradius by coordinate descent on the torus angles.
  double step = 0.5;
  while (step > 1e-7) {
    bool improved = false;
    for (int c = 0; c < n; ++c) {
      for (double sgn : {+1.0, -1.0}) {
        std::vector<double> trial = best_angles;
        trial[static_cast<std::size_t>(c)] += sgn * step;
        const double norm = norm2(point_from_angles(n, trial).z);
        if (norm > rmax) {
          rmax = norm;
          best_angles = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  const double r = detail_shrink_certify(GPoint{n, std::vector<Complex>(
                                                        static_cast<std::size_t>(n), Complex(0.0))},
                                         rmin, std::max(samples, 1000), seed);
  return BallRadii{r, rmax};
}

// Shrinks r until the sphere of radius r*(1-1e-3) around `center` passes the
// strict-interior test on a seeded direction grid.
double detail_shrink_certify(const GPoint& center, double r0, int directions,
                             std::uint64_t seed) {
  const int n = center.n;
  double r = r0;
  for (int round = 0; round < 400 && r > 1e-12; ++round) {
    bool ok = true;
    for (int t = 0; t < directions; ++t) {
      std::vector<Complex> dir(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        dir[static_cast<std::size_t>(c)] = rng::complex_gaussian(
            seed ^ 0x5b11ca7e5ULL, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(c));
      const double dn = norm2(dir);
      if (dn == 0.0) continue;
      GPoint p;
      p.n = n;
      p.z.resize(static_cast<std::size_t>(n));
      const double scale = r * (1.0 - 1e-3) / dn;
      for (int c = 0; c < n; ++c)
        p.z[static_cast<std::size_t>(c)] =
            center.z[static_cast<std::size_t>(c)] + scale * dir[static_cast<std::size_t>(c)];
      if (in_symmetrized_polydisk(p) != Membership::kInside) {
        ok = false;
        break;
      }
    }
    if (ok) break;
    r *= 0.95;
  }
  return r;
}

double certified_ball_at(const GPoint& center, int samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("certified_ball_at: samples must be >= 1000");
  const int n = center.n;
  double r0 = std::numeric_limits<double>::infinity();
  for (const GPoint& s : shilov_sample(n, samples, seed)) {
    double acc = 0.0;
    for (int c = 0; c < n; ++c)
      acc += std::norm(s.z[static_cast<std::size_t>(c)] - center.z[static_cast<std::size_t>(c)]);
    r0 = std::min(r0, std::sqrt(acc));
  }
  return detail_shrink_certify(center, r0, samples, seed);
}

}  // namespace specball
