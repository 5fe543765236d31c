#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

/// Polynomial in one variable with rational coefficients, lowest degree first.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coefficients);

  static UnivariatePoly constant(const Rational& c) { return UnivariatePoly({c}); }
  /// The identity polynomial x.
  static UnivariatePoly identity() { return UnivariatePoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero polynomial reports degree 0.
  int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  /// Coefficient form "[c0, c1, ...]".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

using IntegerPoint = std::pair<long, Rational>;

/// Lagrange interpolation through pairwise distinct integer abscissae.
/// Throws Error("degenerate interpolation input") on duplicates or an empty list.
UnivariatePoly interpolate(std::span<const IntegerPoint> points);

Rational evaluate(const UnivariatePoly& p, long x);

bool is_constant(const UnivariatePoly& p);

/// Forward differences Δ^j P(0), j = 0..len-1, of the value sequence P(0), P(1), ...
std::vector<Rational> forward_differences(std::span<const Rational> values);

/// Expands Σ_j diffs[j]·C(x, j) into monomial coefficients.
UnivariatePoly from_newton_binomial(std::span<const Rational> diffs);

}  // namespace slicekit
