#include "slicekit/univariate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "slicekit/error.hpp"

namespace slicekit {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UnivariatePoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePoly(std::move(out));
}

std::string UnivariatePoly::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ']';
  return os.str();
}

UnivariatePoly interpolate(std::span<const IntegerPoint> points) {
  if (points.empty()) throw Error(ErrorKind::Input, "degenerate interpolation input");
  std::set<long> seen;
  for (const auto& [x, _] : points)
    if (!seen.insert(x).second) throw Error(ErrorKind::Input, "degenerate interpolation input");

  UnivariatePoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UnivariatePoly basis = UnivariatePoly::constant(1);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * UnivariatePoly({Rational(-points[j].first), Rational(1)});
      denom *= Rational(points[i].first - points[j].first);
    }
    result = result + basis * UnivariatePoly::constant(points[i].second / denom);
  }
  return result;
}

Rational evaluate(const UnivariatePoly& p, long x) { return p(Rational(x)); }

bool is_constant(const UnivariatePoly& p) { return p.degree() == 0; }

std::vector<Rational> forward_differences(std::span<const Rational> values) {
  std::vector<Rational> row(values.begin(), values.end());
  std::vector<Rational> diffs;
  diffs.reserve(row.size());
  while (!row.empty()) {
    diffs.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return diffs;
}

UnivariatePoly from_newton_binomial(std::span<const Rational> diffs) {
  UnivariatePoly result;
  UnivariatePoly falling = UnivariatePoly::constant(1);  // C(x, j)
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    result = result + falling * UnivariatePoly::constant(diffs[j]);
    falling = falling * UnivariatePoly({Rational(-static_cast<long>(j)), Rational(1)}) *
              UnivariatePoly::constant(Rational(1, static_cast<std::int64_t>(j + 1)));
  }
  return result;
}

}  // namespace slicekit
