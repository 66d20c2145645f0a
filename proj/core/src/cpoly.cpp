#include "specball/cpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "specball/errors.hpp"

namespace specball {

namespace {

std::string describe(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) os << ", ";
    os << "[" << p[k].real() << "," << p[k].imag() << "]";
  }
  os << "]";
  return os.str();
}

// Horner bound sum |c_i| |z|^i, the attainable evaluation accuracy scale.
double eval_magnitude_bound(const Polynomial& p, Complex z) {
  double az = std::abs(z);
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * az + std::abs(p[k]);
  return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) == 0.0) coeffs_.pop_back();
  if (coeffs_.empty() || std::abs(coeffs_.back()) == 0.0)
    throw std::invalid_argument("Polynomial: zero polynomial has no monic normal form");
  const Complex lead = coeffs_.back();
  if (lead != Complex(1.0)) {
    for (auto& c : coeffs_) c /= lead;
  }
  coeffs_.back() = Complex(1.0);
}

Complex Polynomial::operator()(Complex t) const {
  Complex acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * t + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

double Polynomial::max_coeff_magnitude() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex horner(std::span<const Complex> coeffs, Complex t) {
  Complex acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

std::vector<Complex> derivative_coeffs(const Polynomial& p) {
  if (p.degree() == 0) return {Complex(0.0)};
  std::vector<Complex> d(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) d[static_cast<std::size_t>(k - 1)] = double(k) * p[k];
  return d;
}

Polynomial poly_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (const Complex& r : roots) {
    c.push_back(Complex(0.0));
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

Polynomial poly_from_sym(const SymCoeffs& s) {
  const int n = s.n;
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Complex(1.0);
  double sign = -1.0;
  for (int j = 1; j <= n; ++j) {
    c[static_cast<std::size_t>(n - j)] = sign * s.values[static_cast<std::size_t>(j - 1)];
    sign = -sign;
  }
  return Polynomial(std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(static_cast<std::size_t>(a.degree() + b.degree()) + 1, Complex(0.0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, std::vector<Complex>> poly_divmod(const Polynomial& dividend,
                                                        const Polynomial& divisor) {
  const int m = dividend.degree();
  const int k = divisor.degree();
  if (k > m) throw std::invalid_argument("poly_divmod: divisor degree exceeds dividend degree");
  std::vector<Complex> work = dividend.coeffs();
  std::vector<Complex> quot(static_cast<std::size_t>(m - k) + 1);
  for (int i = m - k; i >= 0; --i) {
    const Complex q = work[static_cast<std::size_t>(i + k)];
    quot[static_cast<std::size_t>(i)] = q;
    for (int j = 0; j <= k; ++j) work[static_cast<std::size_t>(i + j)] -= q * divisor[j];
  }
  work.resize(static_cast<std::size_t>(std::max(k, 1)));
  return {Polynomial(std::move(quot)), std::move(work)};
}

namespace {

std::vector<Complex> companion_roots(const Polynomial& p) {
  const int d = p.degree();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p, double tol) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("roots: degree must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("roots: tolerance must be positive");
  if (d == 1) return {-p[0]};

  const std::vector<Complex> dp = derivative_coeffs(p);
  const double coeff_scale = 1.0 + p.max_coeff_magnitude();
  const double resid_target = tol * coeff_scale;

  // Cauchy bound start circle with an asymmetric phase so no iterate begins
  // on a root ray of the common test polynomials t^n - a.
  double radius = 0.0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(p[k]));
  radius = 1.0 + radius;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double th = 2.0 * std::numbers::pi * (k + 0.25) / d + 0.4;
    z[static_cast<std::size_t>(k)] = radius * Complex(std::cos(th), std::sin(th));
  }

  constexpr int kMaxIter = 800;
  const double eps = std::numeric_limits<double>::epsilon();
  bool converged = false;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double max_rel_step = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex& zk = z[static_cast<std::size_t>(k)];
      const Complex ev = p(zk);
      Complex dv = horner(dp, zk);
      if (std::abs(dv) == 0.0) {
        // Stationary start point; nudge off the critical point.
        zk += Complex(1e-3, 2e-3) * (1.0 + std::abs(zk));
        max_rel_step = 1.0;
        continue;
      }
      const Complex w = ev / dv;
      Complex s(0.0);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Complex diff = zk - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
        s += 1.0 / diff;
      }
      const Complex denom = 1.0 - w * s;
      const Complex step = (std::abs(denom) == 0.0) ? w : w / denom;
      zk -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(zk)));
    }
    // Multiple roots contract linearly, so iterate to step stagnation rather
    // than stopping at the first residual pass; that tightens clusters far
    // below the naive |p(z)| <= tol floor.
    if (max_rel_step < 4.0 * eps) {
      converged = true;
      break;
    }
  }

  auto acceptable = [&](const std::vector<Complex>& cand) {
    for (const Complex& r : cand) {
      const double resid = std::abs(p(r));
      const double floor = 64.0 * d * eps * eval_magnitude_bound(p, r);
      if (resid > std::max(resid_target, floor)) return false;
    }
    return true;
  };

  if (converged || acceptable(z)) {
    if (acceptable(z)) return z;
  }

  // Aberth stalled: companion-matrix eigenvalues, then a Newton polish.
  std::vector<Complex> cand = companion_roots(p);
  for (Complex& r : cand) {
    for (int it = 0; it < 3; ++it) {
      const Complex dv = horner(dp, r);
      if (std::abs(dv) == 0.0) break;
      r -= p(r) / dv;
    }
  }
  if (acceptable(cand)) return cand;
  throw NumericalError("roots: no convergence for polynomial " + describe(p));
}

std::vector<ClusteredRoot> roots_clustered(const Polynomial& p, double tol, double merge_radius) {
  std::vector<Complex> r = roots(p, tol);
  const int d = static_cast<int>(r.size());
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)]) <=
          merge_radius)
        parent[static_cast<std::size_t>(find(j))] = find(i);

  std::vector<ClusteredRoot> out;
  for (int i = 0; i < d; ++i) {
    if (find(i) != i) continue;
    Complex sum(0.0);
    int count = 0;
    for (int j = 0; j < d; ++j)
      if (find(j) == i) {
        sum += r[static_cast<std::size_t>(j)];
        ++count;
      }
    out.push_back({sum / double(count), count});
  }
  std::sort(out.begin(), out.end(), [](const ClusteredRoot& a, const ClusteredRoot& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) < std::abs(b.value);
    return std::arg(a.value) < std::arg(b.value);
  });
  return out;
}

SymCoeffs elem_sym(std::span<const Complex> roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex(0.0));
  e[0] = Complex(1.0);
  int used = 0;
  for (const Complex& r : roots) {
    ++used;
    for (int j = used; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += r * e[static_cast<std::size_t>(j - 1)];
  }
  return SymCoeffs{n, std::vector<Complex>(e.begin() + 1, e.end())};
}

std::vector<Complex> newton_convert(NewtonDirection direction, std::span<const Complex> input,
                                    int n) {
  if (static_cast<int>(input.size()) != n)
    throw std::invalid_argument("newton_convert: input length must equal n");
  std::vector<Complex> out(static_cast<std::size_t>(n));
  if (direction == NewtonDirection::kPowerSumsToElementary) {
    // k e_k = sum_{j=1..k} (-1)^(j-1) e_(k-j) p_j, with e_0 = 1.
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex(0.0));
    e[0] = Complex(1.0);
    for (int k = 1; k <= n; ++k) {
      Complex acc(0.0);
      double sign = 1.0;
      for (int j = 1; j <= k; ++j) {
        acc += sign * e[static_cast<std::size_t>(k - j)] * input[static_cast<std::size_t>(j - 1)];
        sign = -sign;
      }
      e[static_cast<std::size_t>(k)] = acc / double(k);
      out[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(k)];
    }
  } else {
    // p_k = sum_{i=1..k-1} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k.
    std::vector<Complex> ps(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (int k = 1; k <= n; ++k) {
      Complex acc(0.0);
      double sign = 1.0;
      for (int i = 1; i < k; ++i) {
        acc += sign * input[static_cast<std::size_t>(i - 1)] * ps[static_cast<std::size_t>(k - i)];
        sign = -sign;
      }
      acc += sign * double(k) * input[static_cast<std::size_t>(k - 1)];
      ps[static_cast<std::size_t>(k)] = acc;
      out[static_cast<std::size_t>(k - 1)] = acc;
    }
  }
  return out;
}

std::optional<Complex> self_inversive(const Polynomial& p, double tol) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("self_inversive: degree must be >= 1");
  // Monic normal form pins the candidate: j = n gives a_0 = eps * conj(a_n) = eps.
  const Complex eps = p[0];
  if (std::abs(std::abs(eps) - 1.0) > tol) return std::nullopt;
  const double scale = 1.0 + p.max_coeff_magnitude();
  for (int j = 0; j <= n; ++j) {
    if (std::abs(p[n - j] - eps * std::conj(p[j])) > tol * scale) return std::nullopt;
  }
  return eps;
}

CircleTest roots_on_circle(const Polynomial& p, double tol, double merge_radius) {
  if (p.degree() < 1) throw std::invalid_argument("roots_on_circle: degree must be >= 1");
  double dev = 0.0;
  if (merge_radius > 0.0) {
    for (const ClusteredRoot& c : roots_clustered(p, 1e-12, merge_radius))
      dev = std::max(dev, std::abs(std::abs(c.value) - 1.0));
  } else {
    for (const Complex& r : roots(p, 1e-12)) dev = std::max(dev, std::abs(std::abs(r) - 1.0));
  }
  return CircleTest{dev <= tol, dev};
}

}  // namespace specball
