#include "specball/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "specball/errors.hpp"

namespace specball {

Polynomial char_poly(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n < 1 || m.rows() != m.cols())
    throw std::invalid_argument("char_poly: matrix must be square, n >= 1");
  // Faddeev-LeVerrier: B_1 = M, c_(n-1) = -tr B_1;
  //                    B_k = M (B_(k-1) + c_(n-k+1) I), c_(n-k) = -tr(B_k)/k.
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0));
  c[static_cast<std::size_t>(n)] = Complex(1.0);
  ComplexMatrix b = m;
  c[static_cast<std::size_t>(n - 1)] = -b.trace();
  for (int k = 2; k <= n; ++k) {
    b = m * (b + c[static_cast<std::size_t>(n - k + 1)] * ComplexMatrix::Identity(n, n));
    c[static_cast<std::size_t>(n - k)] = -b.trace() / double(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m, double tol) {
  return roots(char_poly(m), tol);
}

double spectral_radius(const ComplexMatrix& m) {
  double rho = 0.0;
  for (const Complex& ev : eigenvalues(m)) rho = std::max(rho, std::abs(ev));
  return rho;
}

int numerical_rank(const ComplexMatrix& m, double rel_threshold) {
  ComplexMatrix a = m;
  const int n = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  const double thresh = rel_threshold * m.norm();
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < n; ++col) {
    // Full pivoting within the remaining block.
    int pr = row, pc = col;
    double best = 0.0;
    for (int i = row; i < n; ++i)
      for (int j = col; j < cols; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pr = i;
          pc = j;
        }
    if (best <= thresh) break;
    a.row(row).swap(a.row(pr));
    a.col(col).swap(a.col(pc));
    for (int i = row + 1; i < n; ++i) {
      const Complex f = a(i, col) / a(row, col);
      a.row(i).tail(cols - col) -= f * a.row(row).tail(cols - col);
    }
    ++rank;
    ++row;
  }
  return rank;
}

namespace {

struct Cluster {
  Complex mean;
  int size = 0;
};

std::vector<Cluster> cluster_values(const std::vector<Complex>& values, double radius) {
  const int d = static_cast<int>(values.size());
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(j)]) <=
          radius)
        parent[static_cast<std::size_t>(find(j))] = find(i);
  std::vector<Cluster> out;
  for (int i = 0; i < d; ++i) {
    if (find(i) != i) continue;
    Complex sum(0.0);
    int count = 0;
    for (int j = 0; j < d; ++j)
      if (find(j) == i) {
        sum += values[static_cast<std::size_t>(j)];
        ++count;
      }
    out.push_back({sum / double(count), count});
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (std::abs(a.mean) != std::abs(b.mean)) return std::abs(a.mean) < std::abs(b.mean);
    return std::arg(a.mean) < std::arg(b.mean);
  });
  return out;
}

}  // namespace

JordanProfile jordan_profile(const ComplexMatrix& m, double cluster_tol) {
  const int n = static_cast<int>(m.rows());
  const std::vector<Complex> evs = eigenvalues(m);
  const std::vector<Cluster> clusters = cluster_values(evs, cluster_tol);

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j)
      min_gap = std::min(min_gap, std::abs(clusters[i].mean - clusters[j].mean));
  if (clusters.size() > 1 && min_gap <= 10.0 * cluster_tol) {
    std::ostringstream os;
    os << "jordan_profile: eigenvalue clusters too close, gap " << min_gap
       << " <= " << 10.0 * cluster_tol;
    throw NumericalError(os.str());
  }

  JordanProfile profile;
  profile.cyclic = true;
  for (const Cluster& cl : clusters) {
    EigenvalueRecord rec;
    rec.lambda = cl.mean;
    rec.alg_mult = cl.size;
    ComplexMatrix shifted = m - cl.mean * ComplexMatrix::Identity(n, n);
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    rec.nilpotence = 0;
    for (int k = 1; k <= cl.size; ++k) {
      power = power * shifted;
      if (numerical_rank(power) == n - cl.size) {
        rec.nilpotence = k;
        break;
      }
    }
    if (rec.nilpotence == 0) {
      std::ostringstream os;
      os << "jordan_profile: rank of (M - lambda I)^k never reached " << (n - cl.size)
         << " for lambda = (" << cl.mean.real() << "," << cl.mean.imag() << ")";
      throw NumericalError(os.str());
    }
    if (rec.nilpotence < rec.alg_mult) profile.cyclic = false;
    profile.eigenvalues.push_back(rec);
  }
  return profile;
}

ComplexMatrix jordan_build(std::vector<JordanBlockSpec> blocks) {
  int n = 0;
  for (const JordanBlockSpec& b : blocks) {
    if (b.size < 1) throw std::invalid_argument("jordan_build: block sizes must be >= 1");
    n += b.size;
  }
  if (n == 0) throw std::invalid_argument("jordan_build: total size is zero");

  // Stable-group by eigenvalue (first-appearance order), sizes decreasing
  // within each group.
  std::vector<std::pair<Complex, std::vector<int>>> groups;
  for (const JordanBlockSpec& b : blocks) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == b.lambda; });
    if (it == groups.end())
      groups.push_back({b.lambda, {b.size}});
    else
      it->second.push_back(b.size);
  }
  for (auto& g : groups) std::sort(g.second.begin(), g.second.end(), std::greater<int>());

  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  int pos = 0;
  for (const auto& [lambda, sizes] : groups) {
    for (int size : sizes) {
      for (int i = 0; i < size; ++i) {
        out(pos + i, pos + i) = lambda;
        if (i > 0) out(pos + i - 1, pos + i) = Complex(1.0);
      }
      pos += size;
    }
  }
  return out;
}

std::vector<JordanBlockSpec> read_jordan_blocks(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n < 1 || m.rows() != m.cols())
    throw std::invalid_argument("read_jordan_blocks: matrix must be square, n >= 1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex e = m(i, j);
      if (i == j) continue;
      if (j == i + 1) {
        if (e != Complex(0.0) && e != Complex(1.0))
          throw std::invalid_argument("read_jordan_blocks: superdiagonal entries must be 0 or 1");
        if (e == Complex(1.0) && m(i, i) != m(j, j))
          throw std::invalid_argument(
              "read_jordan_blocks: superdiagonal 1 between distinct eigenvalues");
      } else if (e != Complex(0.0)) {
        throw std::invalid_argument("read_jordan_blocks: matrix is not in Jordan form");
      }
    }
  std::vector<JordanBlockSpec> blocks;
  int start = 0;
  for (int i = 0; i < n; ++i) {
    const bool linked = (i + 1 < n) && m(i, i + 1) == Complex(1.0);
    if (!linked) {
      blocks.push_back({m(start, start), i - start + 1});
      start = i + 1;
    }
  }
  return blocks;
}

NilpotentStructure f0_and_d(const ComplexMatrix& v) {
  const int n = static_cast<int>(v.rows());
  if (n < 1 || v.rows() != v.cols())
    throw std::invalid_argument("f0_and_d: matrix must be square, n >= 1");

  // Exact structural check: entries are 0 everywhere except superdiagonal
  // ones; a nonzero diagonal would not be nilpotent.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex e = v(i, j);
      const bool superdiag = (j == i + 1);
      if (superdiag) {
        if (e != Complex(0.0) && e != Complex(1.0))
          throw std::invalid_argument("f0_and_d: not a nilpotent Jordan matrix");
      } else if (e != Complex(0.0)) {
        throw std::invalid_argument("f0_and_d: not a nilpotent Jordan matrix");
      }
    }

  NilpotentStructure out;
  for (int j = 0; j < n; ++j) {
    bool zero_col = true;
    for (int i = 0; i < n; ++i)
      if (v(i, j) != Complex(0.0)) zero_col = false;
    if (zero_col) out.f0.push_back(j + 1);  // 1-based, matching b_l
  }
  // Every nilpotent Jordan matrix has column 1 zero.
  if (out.f0.empty() || out.f0.front() != 1)
    throw std::invalid_argument("f0_and_d: not a nilpotent Jordan matrix");

  // Gaps b_(l+1) - b_l, with b_(n-r+1) := n+1, must be non-increasing.
  std::vector<int> b = out.f0;
  b.push_back(n + 1);
  for (std::size_t l = 0; l + 2 < b.size(); ++l)
    if (b[l + 1] - b[l] < b[l + 2] - b[l + 1])
      throw std::invalid_argument("f0_and_d: blocks violate the decreasing-gap convention");

  out.m = b[1] - b[0];
  out.d.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int col : out.f0)
      if (col >= n - i + 2 && col <= n) ++count;
    out.d[static_cast<std::size_t>(i - 1)] = 1 + count;
  }
  out.estdi_ok = true;
  for (int i = 1; i <= n; ++i)
    if (out.m * out.d[static_cast<std::size_t>(i - 1)] < i) out.estdi_ok = false;
  return out;
}

Complex mobius_scalar(Complex z, Complex lambda0) {
  return (lambda0 - z) / (1.0 - std::conj(lambda0) * z);
}

ComplexMatrix mobius(const ComplexMatrix& m, Complex lambda0) {
  const int n = static_cast<int>(m.rows());
  if (std::abs(lambda0) >= 1.0)
    throw std::invalid_argument("mobius: |lambda0| must be < 1");
  const ComplexMatrix denom =
      ComplexMatrix::Identity(n, n) - std::conj(lambda0) * m;
  Eigen::FullPivLU<ComplexMatrix> lu(denom);
  if (!lu.isInvertible())
    throw NumericalError("mobius: I - conj(lambda0) M is singular");
  const ComplexMatrix numer = lambda0 * ComplexMatrix::Identity(n, n) - m;
  // (lambda0 I - M) and (I - conj(lambda0) M)^(-1) commute; either order works.
  return lu.solve(numer);
}

}  // namespace specball
