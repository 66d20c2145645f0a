#include "specball/green_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "specball/errors.hpp"
#include "specball/rng.hpp"
#include "specball/splitting.hpp"

namespace specball {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

ComplexMatrix companion(const Polynomial& p) {
  const int n = p.degree();
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = Complex(1.0);
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

double gpoint_norm(const GPoint& z) {
  double acc = 0.0;
  for (const Complex& c : z.z) acc += std::norm(c);
  return std::sqrt(acc);
}

}  // namespace

std::vector<double> default_fit_radii() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

ComplexMatrix make_remark_X(const ComplexMatrix& v) {
  const NilpotentStructure s = f0_and_d(v);  // validates nilpotent Jordan form
  const int n = static_cast<int>(v.rows());
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  x(s.m - 1, 0) = Complex(1.0);
  return x;
}

ComplexMatrix make_roots_of_unity_X(int n) {
  if (n < 1) throw std::invalid_argument("make_roots_of_unity_X: n must be >= 1");
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = Complex(1.0);
  c(0, n - 1) = Complex(1.0);  // companion of t^n - 1, the cyclic shift
  return c;
}

ComplexMatrix make_gap_X(int n, int m, std::uint64_t seed) {
  if (m < 1 || m > n - 1)
    throw std::invalid_argument("make_gap_X: requires 1 <= m <= n-1");
  constexpr int kRetryBudget = 100;
  constexpr double kSeparation = 0.05;
  const double box = 1.0 / std::numbers::sqrt2;  // keeps |sigma_j| <= 1

  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    SymCoeffs s;
    s.n = n;
    s.values.assign(static_cast<std::size_t>(n), Complex(0.0));
    for (int j = m + 1; j <= n; ++j)
      s.values[static_cast<std::size_t>(j - 1)] =
          box * rng::complex_box(seed, static_cast<std::uint64_t>(attempt),
                                 static_cast<std::uint64_t>(j));
    // The |zeta|^(m+1) leading order needs a solidly nonzero sigma_(m+1).
    if (std::abs(s.values[static_cast<std::size_t>(m)]) < kSeparation) continue;

    const Polynomial p = poly_from_sym(s);
    const std::vector<Complex> rts = roots(p);
    bool ok = true;
    for (std::size_t i = 0; i < rts.size() && ok; ++i) {
      if (std::abs(rts[i]) < kSeparation) ok = false;
      for (std::size_t j = i + 1; j < rts.size() && ok; ++j)
        if (std::abs(rts[i] - rts[j]) < kSeparation) ok = false;
    }
    if (ok) return companion(p);
  }
  throw NumericalError("make_gap_X: retry budget exhausted without a well-separated spectrum");
}

ExponentFit exponent_fit(const std::function<double(Complex)>& h,
                         const std::vector<double>& radii, int angles, std::uint64_t seed) {
  if (radii.size() < 2) throw std::invalid_argument("exponent_fit: need at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] <= 0.0) throw std::invalid_argument("exponent_fit: radii must be positive");
    if (i > 0 && radii[i] >= radii[i - 1])
      throw std::invalid_argument("exponent_fit: radii must be strictly decreasing");
  }
  if (angles < 1) throw std::invalid_argument("exponent_fit: angles must be >= 1");

  const double phase = rng::angle(seed, 0xfa5eULL);
  std::vector<double> values(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double best = kNegInf;
    for (int a = 0; a < angles; ++a) {
      const double th = phase + 2.0 * std::numbers::pi * a / angles;
      const double val = h(radii[i] * Complex(std::cos(th), std::sin(th)));
      if (!std::isfinite(val)) {
        std::ostringstream os;
        os << "exponent_fit: non-finite sample " << val << " at radius " << radii[i];
        throw NumericalError(os.str());
      }
      best = std::max(best, val);
    }
    values[i] = best;
  }

  // Least squares of value against log radius.
  const double count = static_cast<double>(radii.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double x = std::log(radii[i]);
    sx += x;
    sy += values[i];
    sxx += x * x;
    sxy += x * values[i];
  }
  ExponentFit fit;
  fit.radii = radii;
  fit.angles_per_radius = angles;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  for (std::size_t i = 0; i < radii.size(); ++i)
    fit.max_abs_residual = std::max(
        fit.max_abs_residual,
        std::abs(values[i] - (fit.slope * std::log(radii[i]) + fit.intercept)));
  return fit;
}

double green_lower_omega_nilpotent(int m, const ComplexMatrix& m_point) {
  if (m < 1) throw std::invalid_argument("green_lower_omega_nilpotent: m must be >= 1");
  const double rho = spectral_radius(m_point);
  if (rho == 0.0) return kNegInf;
  return m * std::log(rho);
}

double green_lower_omega_split(int m0, const ComplexMatrix& m_point, Complex center,
                               double delta) {
  if (m0 < 1) throw std::invalid_argument("green_lower_omega_split: m0 must be >= 1");
  const SplitResult split = local_factor(m_point, center, delta);
  double rho0 = 0.0;
  for (const Complex& r : roots(split.p0)) rho0 = std::max(rho0, std::abs(r));
  if (rho0 == 0.0) return kNegInf;
  return m0 * std::log(rho0);
}

double lempert_upper_disc(const ComplexMatrix& v, const ComplexMatrix& x, Complex zeta,
                          int circle_points) {
  const double r = std::abs(zeta);
  if (r == 0.0) return kNegInf;
  // log rho is plurisubharmonic, so checking the circle |w| = |zeta| covers
  // the whole closed disc.
  for (int j = 0; j < circle_points; ++j) {
    const double th = 2.0 * std::numbers::pi * j / circle_points;
    const Complex w = r * Complex(std::cos(th), std::sin(th));
    const double rho = spectral_radius(v + w * x);
    if (rho >= 1.0) {
      std::ostringstream os;
      os << "lempert_upper_disc: disc leaves the spectral ball at w = (" << w.real() << ","
         << w.imag() << "), rho = " << rho;
      throw NumericalError(os.str());
    }
  }
  return std::log(r);
}

GreenBounds green_squeeze_gn(const GPoint& z, double r, double R) {
  if (!(r > 0.0) || !(R >= r))
    throw std::invalid_argument("green_squeeze_gn: need 0 < r <= R");
  const double norm = gpoint_norm(z);
  if (norm == 0.0) return GreenBounds{kNegInf, kNegInf};
  if (norm >= r)
    throw std::invalid_argument("green_squeeze_gn: ||z|| must be below the inner radius");
  return GreenBounds{std::log(norm / R), std::log(norm / r)};
}

namespace {

struct ReducedPole {
  ComplexMatrix reduced;      // Jordan form, lambda0 group leading, mapped to 0
  int n0 = 0;                 // n(lambda0)
  int m0 = 0;                 // m(lambda0)
  bool fully_nilpotent = false;
  double mobius_char_residual = 0.0;
};

ReducedPole reduce_pole(const ComplexMatrix& v, Complex lambda0) {
  const std::vector<JordanBlockSpec> blocks = read_jordan_blocks(v);

  std::vector<JordanBlockSpec> reordered;
  int n0 = 0, m0 = 0;
  for (const JordanBlockSpec& b : blocks)
    if (b.lambda == lambda0) {
      reordered.push_back({Complex(0.0), b.size});
      n0 += b.size;
      m0 = std::max(m0, b.size);
    }
  for (const JordanBlockSpec& b : blocks)
    if (b.lambda != lambda0)
      reordered.push_back({mobius_scalar(b.lambda, lambda0), b.size});

  ReducedPole out;
  out.reduced = jordan_build(reordered);
  out.n0 = n0;
  out.m0 = m0;
  out.fully_nilpotent = (n0 == static_cast<int>(v.rows()));

  // The matrix Moebius image is only similar to the rebuilt canonical form,
  // but sigma (hence everything the Green data sees) must agree.
  const Polynomial pm = char_poly(mobius(v, lambda0));
  const Polynomial pr = char_poly(out.reduced);
  for (int k = 0; k <= pm.degree(); ++k)
    out.mobius_char_residual = std::max(out.mobius_char_residual, std::abs(pm[k] - pr[k]));
  return out;
}

}  // namespace

Theorem2Report theorem2_report(const ComplexMatrix& v, const Theorem2Config& config) {
  const int n = static_cast<int>(v.rows());
  const std::vector<JordanBlockSpec> blocks = read_jordan_blocks(v);
  if (spectral_radius(v) >= 1.0)
    throw std::invalid_argument("theorem2_report: pole must lie in the spectral ball");

  Theorem2Report report;
  // Structural profile: exact for Jordan input.
  {
    std::vector<Complex> seen;
    report.cyclic = true;
    for (const JordanBlockSpec& b : blocks) {
      if (std::find(seen.begin(), seen.end(), b.lambda) != seen.end()) continue;
      seen.push_back(b.lambda);
      EigenvalueRecord rec;
      rec.lambda = b.lambda;
      for (const JordanBlockSpec& c : blocks)
        if (c.lambda == b.lambda) {
          rec.alg_mult += c.size;
          rec.nilpotence = std::max(rec.nilpotence, c.size);
        }
      if (rec.nilpotence < rec.alg_mult) report.cyclic = false;
      report.profile.eigenvalues.push_back(rec);
    }
    report.profile.cyclic = report.cyclic;
  }

  // Pick the first derogatory eigenvalue; for a cyclic pole fall back to the
  // leading one and show the pinched remark-X fit instead.
  const EigenvalueRecord* chosen = nullptr;
  for (const EigenvalueRecord& rec : report.profile.eigenvalues)
    if (rec.nilpotence < rec.alg_mult) {
      chosen = &rec;
      break;
    }
  if (chosen == nullptr) chosen = &report.profile.eigenvalues.front();

  report.lambda0 = chosen->lambda;
  const ReducedPole red = reduce_pole(v, chosen->lambda);
  report.n0 = red.n0;
  report.m0 = red.m0;
  report.gap = red.n0 - red.m0;
  report.mobius_char_residual = red.mobius_char_residual;

  const ComplexMatrix& vr = red.reduced;
  const int n0 = red.n0;
  const int m0 = red.m0;

  // Omega side: the remark perturbation of the leading nilpotent part.
  ComplexMatrix x_remark = ComplexMatrix::Zero(n, n);
  {
    const ComplexMatrix leading = vr.topLeftCorner(n0, n0);
    const ComplexMatrix xr = make_remark_X(leading);
    x_remark.topLeftCorner(n0, n0) = xr;
  }
  auto h_omega = [&](Complex zeta) {
    const ComplexMatrix m = vr + zeta * x_remark;
    if (red.fully_nilpotent) return green_lower_omega_nilpotent(m0, m);
    const double delta = choose_delta(m, Complex(0.0));
    return green_lower_omega_split(m0, m, Complex(0.0), delta);
  };
  report.omega_lower_fit = exponent_fit(h_omega, config.radii, config.angles, config.seed);
  report.omega_bound_exponent = report.omega_lower_fit.slope;
  report.omega_construction = "remark_X";
  {
    double pinch = 0.0;
    for (double r : config.radii)
      pinch = std::max(pinch, std::abs(h_omega(Complex(r, 0.0)) - std::log(r)));
    report.pinch_max_abs = pinch;
  }

  // G side. Derogatory pole: the roots-of-unity curve through the sigma
  // fiber of the pole; cyclic pole: the remark curve itself (both slopes
  // then agree, which is the point).
  const GPoint pole = sigma(vr);
  const bool pole_at_origin = [&] {
    for (const Complex& c : pole.z)
      if (std::abs(c) > 1e-13) return false;
    return true;
  }();

  double r_in = 0.0, r_out = 0.0;
  if (pole_at_origin) {
    const BallRadii radii = ball_radii(n, config.shilov_samples, config.seed);
    r_in = radii.inradius;
    r_out = radii.circumradius;
  } else {
    r_in = certified_ball_at(pole, config.shilov_samples, config.seed);
    const BallRadii radii = ball_radii(n, config.shilov_samples, config.seed);
    r_out = radii.circumradius + gpoint_norm(pole);  // G_n c B(0,R) c B(p, R + ||p||)
  }
  report.inner_radius = r_in;
  report.outer_radius = r_out;

  ComplexMatrix g_curve_dir;  // curve M(zeta) = zeroed-leading-block vr + zeta * dir
  if (report.cyclic) {
    g_curve_dir = x_remark;
    report.g_construction = "remark_X";
  } else {
    g_curve_dir = ComplexMatrix::Zero(n, n);
    g_curve_dir.topLeftCorner(n0, n0) = make_roots_of_unity_X(n0);
    report.g_construction = "roots_of_unity_X";
  }

  auto h_g = [&](Complex zeta) {
    ComplexMatrix m;
    if (report.cyclic) {
      m = vr + zeta * g_curve_dir;
    } else {
      m = vr;
      m.topLeftCorner(n0, n0).setZero();
      m += zeta * g_curve_dir;
    }
    const GPoint z = sigma(m);
    double disp = 0.0;
    for (int c = 0; c < n; ++c)
      disp += std::norm(z.z[static_cast<std::size_t>(c)] - pole.z[static_cast<std::size_t>(c)]);
    disp = std::sqrt(disp);
    if (disp == 0.0) return kNegInf;
    if (disp >= r_in) {
      std::ostringstream os;
      os << "theorem2_report: sigma displacement " << disp << " leaves the certified ball "
         << r_in << "; use smaller radii";
      throw NumericalError(os.str());
    }
    return std::log(disp / r_in);  // the squeeze upper bound; slope as for the lower
  };

  // Away from the origin the displacement is computed by subtraction, so
  // radii whose displacement would drown in coefficient rounding are dropped.
  std::vector<double> g_radii;
  for (double r : config.radii) {
    if (pole_at_origin || std::pow(r, n0) > 1e-12) g_radii.push_back(r);
  }
  if (g_radii.size() < 2)
    throw NumericalError("theorem2_report: not enough usable radii for the sigma-side fit");
  report.g_side_fit = exponent_fit(h_g, g_radii, config.angles, config.seed);
  report.slope_G = report.g_side_fit.slope;

  // Side computation: the gap-X sigma exponent m0 + 1 (fully nilpotent case).
  if (red.fully_nilpotent && m0 <= n - 1) {
    const ComplexMatrix x_gap = make_gap_X(n, m0, config.seed);
    auto h_gap = [&](Complex zeta) {
      const double norm = gpoint_norm(sigma(zeta * x_gap));
      return norm == 0.0 ? kNegInf : std::log(norm);
    };
    report.side_gap_x_slope =
        exponent_fit(h_gap, config.radii, config.angles, config.seed).slope;
  }

  report.note = report.cyclic
                    ? "cyclic pole: exponents coincide (m = n); remark-X fit shown on both sides"
                    : "derogatory pole: sigma-side exponent n(lambda0) strictly exceeds the "
                      "spectral-ball bound exponent";
  return report;
}

}  // namespace specball
