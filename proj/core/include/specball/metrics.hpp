#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specball/cpoly.hpp"
#include "specball/domains.hpp"

namespace specball {

/// One row of the metric-bounds comparison at the origin in direction
/// e_(n-1): lower bound for the higher-order Caratheodory/Azukawa side,
/// upper bound for the Caratheodory-Reiffen metric.
struct MetricBoundsRow {
  int n = 0;
  double lower = 0.0;      // ((n-1)/n)^(1/(n-1))
  double upper = 0.0;      // (1+(n/(n-2))^(n-1)) / (n/(n-2)+(n/(n-2))^(n-1))
  bool strict_gap = false; // upper < lower
  std::string note;
};

/// ((n-1)/n)^(1/(n-1)), the power-sum competitor value. Requires n >= 2.
double gamma_lower(int n);

/// Closed-form upper bound for gamma_{G_n}(0; e_(n-1)). Requires n >= 3;
/// equals 1/mnt_lower(n, t*) at t* = (-1)^(n-1) (1 + 2/(n-2)).
double gamma_upper(int n);

std::vector<MetricBoundsRow> bounds_table(int n_min, int n_max);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double t, double fuzz = 1e-12) const { return t >= lo - fuzz && t <= hi + fuzz; }
};

/// The t-interval on which the roots-on-circle lemma is guaranteed:
/// [(-1)^(n-1) - 2/(n-2), (-1)^(n-1) + 2/(n-2)]. This is the interval on
/// which the lemma's own sufficient condition (see lakatos_condition) holds;
/// the center sign follows that condition. Requires n >= 3.
Interval lalo_interval(int n);

/// The sufficient condition 2 >= (n-2) |1 + (-1)^n t|, exactly as stated.
bool lakatos_condition(int n, double t);

/// p_(n,t) = t^n + (-1)^(n-1) t l^(n-1) + t l + (-1)^(n-1) in the variable l.
Polynomial lalo_polynomial(int n, double t);

struct LaloResult {
  bool on_circle = false;
  double deviation = 0.0;
  Polynomial q;  // p_(n,t) divided by (l + 1)
};

/// Verifies p_(n,t)(-1) = 0, divides out (l+1), and tests the quotient's
/// roots against the unit circle. Clusters within max(1e-6, 10*tol) are
/// merged first: interval endpoints produce multiple circle roots whose raw
/// computed scatter would mask the true deviation.
LaloResult lalo_check(int n, double t, double tol = 1e-8);

/// The boundary point ((-1)^n t, 0, ..., 0, (-1)^(n-1) t, -1) of G_n.
/// Guaranteed for t in lalo_interval; outside it the point is accepted only
/// if the circle check passes numerically.
GPoint boundary_point_from_t(int n, double t);

/// |t^(n-1) + t| / (1 + |t|^(n-1)), a lower bound for the minimax value M_n
/// valid for t in lalo_interval. `allow_outside_interval` computes the bare
/// formula anywhere (the bound claim then lapses).
double mnt_lower(int n, double t, bool allow_outside_interval = false);

/// The Chebyshev-type problem: minimize over coefficients a the maximum of
/// |z_(n-1) + sum_alpha a_alpha z^alpha| over boundary samples, where alpha
/// ranges over the (n-2)-tuples with alpha_1 + 2 alpha_2 + ... = n-1
/// (restricted form: the single tuple (n-1, 0, ..., 0)).
struct MinimaxProblem {
  int n = 0;
  bool restricted = true;
  std::vector<std::vector<int>> index_set;
  std::vector<GPoint> boundary_samples;
};

/// Samples the Shilov boundary and appends the two explicit boundary-point
/// families (the binomial-type point and the t-grid of boundary_point_from_t)
/// so the sampled minimax dominates every mnt_lower value on the grid.
MinimaxProblem make_minimax_problem(int n, bool restricted, int samples, std::uint64_t seed);

double minimax_objective(const MinimaxProblem& problem, std::span<const Complex> coeffs);

struct MinimaxConfig {
  int restarts = 10;
  int iterations = 3000;
  double step_scale = 0.5;  // subgradient step c/sqrt(k)
  std::uint64_t seed = 1;
};

struct MinimaxResult {
  double estimate = 0.0;               // sampled minimax: a lower bound of the true
                                       // boundary maximum only up to sampling density
  std::vector<Complex> coefficients;   // argmin
  std::vector<double> trace;           // best-so-far, monotone nonincreasing
  int sample_count = 0;
};

/// Projected subgradient descent with square-summable steps and seeded
/// restarts. Fails if the objective stays above its starting value for 1000
/// consecutive iterations.
MinimaxResult minimax_Mn(const MinimaxProblem& problem, const MinimaxConfig& config = {});

struct AsymptoticsRow {
  int n = 0;
  double n_gap_upper = 0.0;  // n (1 - gamma_upper(n)); stays above 2/(1+e^2)
  double n_gap_lower = 0.0;  // n (1 - gamma_lower(n)); decreases to 0
};

/// Rows for n = 10..n_max contrasting the asymptotics of the two bounds.
std::vector<AsymptoticsRow> asymptotics_report(int n_max);

}  // namespace specball
