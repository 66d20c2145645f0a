#include "specball/waring.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace specball {

namespace {

using boost::multiprecision::cpp_int;
// Sparse polynomial in e_1..e_n: exponent vector -> integer coefficient.
using EPoly = std::map<std::vector<int>, cpp_int>;

void add_scaled_shift(EPoly& dst, const EPoly& src, int shift_var, const cpp_int& factor) {
  for (const auto& [expo, coef] : src) {
    std::vector<int> e = expo;
    e[static_cast<std::size_t>(shift_var)] += 1;
    dst[e] += coef * factor;
  }
}

}  // namespace

Rational waring_coefficient(int n, int l, int k) {
  if (n < 2) throw std::invalid_argument("waring_coefficient: n must be >= 2");
  if (k < 1) throw std::invalid_argument("waring_coefficient: k must be >= 1");
  if (l != k * (n - 1))
    throw std::invalid_argument("waring_coefficient: requires l == k*(n-1)");

  // Newton recursion on power sums expressed in the elementary symmetric
  // basis: p_l = sum_{i=1..min(l-1,n)} (-1)^(i-1) e_i p_(l-i)
  //             + (l <= n ? (-1)^(l-1) l e_l : 0),   p_0 = n.
  std::vector<EPoly> p(static_cast<std::size_t>(l) + 1);
  p[0][std::vector<int>(static_cast<std::size_t>(n), 0)] = n;
  for (int m = 1; m <= l; ++m) {
    EPoly acc;
    const int top = std::min(m - 1, n);
    cpp_int sign = 1;
    for (int i = 1; i <= top; ++i) {
      add_scaled_shift(acc, p[static_cast<std::size_t>(m - i)], i - 1, sign);
      sign = -sign;
    }
    if (m <= n) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(m - 1)] = 1;
      acc[e] += ((m % 2 == 1) ? cpp_int(m) : cpp_int(-m));
    }
    p[static_cast<std::size_t>(m)] = std::move(acc);
  }

  std::vector<int> target(static_cast<std::size_t>(n), 0);
  target[static_cast<std::size_t>(n - 2)] = k;
  const auto it = p[static_cast<std::size_t>(l)].find(target);
  const cpp_int num = (it == p[static_cast<std::size_t>(l)].end()) ? cpp_int(0) : it->second;
  return Rational(num, cpp_int(n));
}

}  // namespace specball
