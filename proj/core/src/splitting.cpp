#include "specball/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specball/errors.hpp"

namespace specball {

double choose_delta(const ComplexMatrix& m, Complex target, double tol) {
  std::vector<double> dist;
  for (const Complex& ev : eigenvalues(m)) dist.push_back(std::abs(ev - target));
  std::sort(dist.begin(), dist.end());
  const int n = static_cast<int>(dist.size());

  // Split at the widest admissible gap in the sorted distances.
  int split = -1;
  double best_gap = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double gap = dist[static_cast<std::size_t>(i + 1)] - dist[static_cast<std::size_t>(i)];
    if (gap > 10.0 * tol && gap > best_gap) {
      best_gap = gap;
      split = i;
    }
  }
  if (split < 0) {
    std::ostringstream os;
    os << "choose_delta: no admissible modulus gap; nearest moduli "
       << dist[static_cast<std::size_t>(n > 1 ? n - 2 : 0)] << " and "
       << dist[static_cast<std::size_t>(n - 1)];
    throw NumericalError(os.str());
  }

  const double max_inner = dist[static_cast<std::size_t>(split)];
  const double min_outer = dist[static_cast<std::size_t>(split + 1)];
  // An exactly nilpotent inner cluster would give geometric mean 0; keep the
  // contour a fixed relative distance inside the outer set instead.
  const double inner_eff = std::max(max_inner, 1e-4 * min_outer);
  const double delta = std::sqrt(inner_eff * min_outer);

  for (double d : dist) {
    if (std::abs(d - delta) <= 1e-3 * delta) {
      std::ostringstream os;
      os << "choose_delta: eigenvalue at distance " << d << " too close to contour radius "
         << delta;
      throw NumericalError(os.str());
    }
  }
  return delta;
}

namespace {

// Trapezoid rule on the circle center + delta*e^(i theta) applied to a
// family of integrands, doubling nodes until every component is stable.
template <typename Eval, typename Value>
std::vector<Value> adaptive_contour(Complex center, double delta, int kcount, int start_nodes,
                                    Eval eval_at, const Value& zero,
                                    double stability = 1e-10) {
  auto pass = [&](int nodes) {
    std::vector<Value> acc(static_cast<std::size_t>(kcount), zero);
    for (int j = 0; j < nodes; ++j) {
      const double th = 2.0 * std::numbers::pi * j / nodes;
      const Complex unit(std::cos(th), std::sin(th));
      const Complex zeta = center + delta * unit;
      eval_at(zeta, delta * unit / double(nodes), acc);
    }
    return acc;
  };

  int nodes = start_nodes;
  std::vector<Value> result = pass(nodes);
  for (int round = 0; round < 8; ++round) {
    nodes *= 2;
    std::vector<Value> refined = pass(nodes);
    double diff = 0.0;
    for (int k = 0; k < kcount; ++k) {
      if constexpr (std::is_same_v<Value, Complex>) {
        diff = std::max(diff, std::abs(refined[static_cast<std::size_t>(k)] -
                                       result[static_cast<std::size_t>(k)]));
      } else {
        diff = std::max(diff, (refined[static_cast<std::size_t>(k)] -
                               result[static_cast<std::size_t>(k)])
                                  .norm());
      }
    }
    result = std::move(refined);
    if (diff < stability) return result;
  }
  throw NumericalError(
      "contour quadrature did not stabilize; a root is likely near the contour, "
      "choose a different delta");
}

}  // namespace

std::vector<Complex> contour_power_sums(const ComplexMatrix& m, Complex center, double delta,
                                        int kmax, int nodes) {
  const Polynomial p = char_poly(m);
  const std::vector<Complex> dp = derivative_coeffs(p);

  auto eval_at = [&](Complex zeta, Complex weight, std::vector<Complex>& acc) {
    const Complex pv = p(zeta);
    const Complex logderiv = horner(dp, zeta) / pv;
    Complex zk(1.0);
    for (int k = 0; k <= kmax; ++k) {
      acc[static_cast<std::size_t>(k)] += weight * zk * logderiv;
      zk *= zeta;
    }
  };
  std::vector<Complex> sums =
      adaptive_contour<decltype(eval_at), Complex>(center, delta, kmax + 1, nodes, eval_at,
                                                   Complex(0.0));

  const double n0_real = sums[0].real();
  if (std::abs(n0_real - std::round(n0_real)) > 1e-6 || std::abs(sums[0].imag()) > 1e-6) {
    std::ostringstream os;
    os << "contour_power_sums: Sigma_0 = (" << sums[0].real() << "," << sums[0].imag()
       << ") is not an integer; move the contour away from the spectrum";
    throw NumericalError(os.str());
  }
  return sums;
}

SplitResult local_factor(const ComplexMatrix& m, Complex center, double delta) {
  const int n = static_cast<int>(m.rows());
  const Polynomial p = char_poly(m);

  const std::vector<Complex> count = contour_power_sums(m, center, delta, 0);
  const int n0 = static_cast<int>(std::lround(count[0].real()));
  if (n0 <= 0 || n0 >= n) {
    std::ostringstream os;
    os << "local_factor: contour encloses " << n0 << " of " << n
       << " eigenvalues; the splitting is degenerate";
    throw NumericalError(os.str());
  }

  const std::vector<Complex> sums = contour_power_sums(m, center, delta, n0);
  const std::vector<Complex> power(sums.begin() + 1, sums.end());
  const std::vector<Complex> elem =
      newton_convert(NewtonDirection::kPowerSumsToElementary, power, n0);

  SplitResult out;
  out.delta = delta;
  out.n0 = n0;
  out.sigma0 = SymCoeffs{n0, elem};
  out.p0 = poly_from_sym(out.sigma0);
  out.p1 = poly_divmod(p, out.p0).first;

  const Polynomial prod = poly_mul(out.p0, out.p1);
  double resid = 0.0;
  for (int k = 0; k <= n; ++k) resid = std::max(resid, std::abs(prod[k] - p[k]));
  out.factor_residual = resid;
  const double allowed = 1e-8 * (1.0 + p.max_coeff_magnitude());
  if (resid > allowed) {
    std::ostringstream os;
    os << "local_factor: factorization residual " << resid << " exceeds " << allowed;
    throw NumericalError(os.str());
  }
  return out;
}

namespace {

// Modified Gram-Schmidt without sign flips, so a near-identity input stays a
// near-identity output (Householder QR would be free to negate columns).
ComplexMatrix orthonormalize(const ComplexMatrix& cols) {
  ComplexMatrix q = cols;
  for (int j = 0; j < q.cols(); ++j) {
    for (int i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double norm = q.col(j).norm();
    if (norm < 1e-12)
      throw NumericalError("block_diagonalize: projected basis is numerically degenerate");
    q.col(j) /= norm;
  }
  return q;
}

}  // namespace

BlockDiag block_diagonalize(const ComplexMatrix& m, Complex center, double delta) {
  const int n = static_cast<int>(m.rows());
  const SplitResult split = local_factor(m, center, delta);
  const int n0 = split.n0;

  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  auto eval_at = [&](Complex zeta, Complex weight, std::vector<ComplexMatrix>& acc) {
    acc[0] += weight * (zeta * eye - m).partialPivLu().solve(eye);
  };
  const std::vector<ComplexMatrix> proj = adaptive_contour<decltype(eval_at), ComplexMatrix>(
      center, delta, 1, 256, eval_at, ComplexMatrix::Zero(n, n));
  const ComplexMatrix& pi0 = proj[0];

  const double idem = (pi0 * pi0 - pi0).norm();
  if (idem > 1e-8) {
    std::ostringstream os;
    os << "block_diagonalize: projector not idempotent, |pi0^2 - pi0| = " << idem;
    throw NumericalError(os.str());
  }
  if (numerical_rank(pi0) != n0)
    throw NumericalError("block_diagonalize: projector rank does not match the enclosed count");

  // Basis: pi0 on the leading reference coordinates, complementary projector
  // on the trailing ones.
  ComplexMatrix t(n, n);
  t.leftCols(n0) = orthonormalize(pi0.leftCols(n0));
  t.rightCols(n - n0) = orthonormalize((eye - pi0).rightCols(n - n0));

  Eigen::PartialPivLU<ComplexMatrix> tlu(t);
  const ComplexMatrix similar = tlu.solve(m * t);  // T^(-1) M T

  BlockDiag out;
  out.P = tlu.solve(eye);
  out.M0 = similar.topLeftCorner(n0, n0);
  out.M1 = similar.bottomRightCorner(n - n0, n - n0);
  out.offdiag_residual = std::sqrt(similar.topRightCorner(n0, n - n0).squaredNorm() +
                                   similar.bottomLeftCorner(n - n0, n0).squaredNorm());
  return out;
}

}  // namespace specball
