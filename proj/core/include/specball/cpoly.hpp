#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace specball {

using Complex = std::complex<double>;

/// Monic complex polynomial, coefficients stored lowest degree first.
/// The leading coefficient is exactly 1 after construction; non-monic input
/// is divided through.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex(1.0)} {}
  /// Coefficients lowest degree first. Trailing (high-degree) zeros are
  /// trimmed before normalization; an all-zero list is rejected.
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  /// Horner evaluation.
  Complex operator()(Complex t) const;

  /// Largest coefficient magnitude (including the leading 1).
  double max_coeff_magnitude() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// sigma_1..sigma_n of some underlying n-tuple of eigenvalues. The same data
/// read in two conventions: as the s_i elementary symmetric functions of the
/// roots, or as the signed coefficient vector of a monic polynomial via
/// t^n + sum_j (-1)^j sigma_j t^(n-j).
struct SymCoeffs {
  int n = 0;
  std::vector<Complex> values;
};

/// Horner evaluation of a raw coefficient list (lowest degree first).
Complex horner(std::span<const Complex> coeffs, Complex t);

/// Coefficients of p', lowest degree first (not monic-normalized).
std::vector<Complex> derivative_coeffs(const Polynomial& p);

/// Monic polynomial with the given roots, by direct product expansion.
Polynomial poly_from_roots(std::span<const Complex> roots);

/// Monic polynomial t^n + sum (-1)^j sigma_j t^(n-j) encoded by its sigma.
Polynomial poly_from_sym(const SymCoeffs& s);

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Divides by a monic divisor; returns (quotient, remainder coefficients).
/// remainder has degree < degree(divisor) and is not normalized.
std::pair<Polynomial, std::vector<Complex>> poly_divmod(const Polynomial& dividend,
                                                        const Polynomial& divisor);

/// All roots with multiplicity (list length == degree), by Aberth–Ehrlich
/// simultaneous iteration with a companion-matrix eigensolver fallback.
/// Convergence target: max |p(root)| <= tol * (1 + max coefficient magnitude).
/// Throws NumericalError naming the polynomial if both paths stall.
std::vector<Complex> roots(const Polynomial& p, double tol = 1e-12);

struct ClusteredRoot {
  Complex value;  // multiplicity-weighted cluster mean
  int multiplicity = 1;
};

/// Roots merged into clusters of the given radius (single-linkage); cluster
/// means cancel the first-order scatter of a numerically multiple root.
std::vector<ClusteredRoot> roots_clustered(const Polynomial& p, double tol = 1e-12,
                                           double merge_radius = 1e-11);

/// Elementary symmetric functions of the given values.
SymCoeffs elem_sym(std::span<const Complex> roots);

enum class NewtonDirection {
  kPowerSumsToElementary,
  kElementaryToPowerSums,
};

/// Newton-identity conversion between power sums (p_1..p_n) and elementary
/// symmetric functions (e_1..e_n); `input` must have length n.
std::vector<Complex> newton_convert(NewtonDirection direction, std::span<const Complex> input,
                                    int n);

/// If coefficients satisfy a_(n-j) = eps * conj(a_j) for all j within tol,
/// returns the unimodular eps; otherwise nullopt.
std::optional<Complex> self_inversive(const Polynomial& p, double tol = 1e-9);

struct CircleTest {
  bool on_circle = false;
  double max_deviation = 0.0;  // max over roots of ||root| - 1|
};

/// Tests whether every root modulus lies in [1-tol, 1+tol]. With
/// merge_radius > 0, roots are clustered first and the deviation is taken
/// over cluster means, which is the honest measure near multiple roots.
CircleTest roots_on_circle(const Polynomial& p, double tol, double merge_radius = 0.0);

}  // namespace specball
