#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace specball {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient of sigma_(n-1)^k in p_l / n, where p_l is the l-th power sum
/// written as a polynomial in the elementary symmetric functions
/// sigma_1..sigma_n via the symbolic Newton recursion, carried out in exact
/// integer arithmetic. Requires l == k*(n-1); for those indices the
/// magnitude is (n-1)/n.
Rational waring_coefficient(int n, int l, int k);

}  // namespace specball
