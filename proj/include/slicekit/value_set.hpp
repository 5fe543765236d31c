#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

/// Finite codomain A: strictly increasing, at least two distinct rationals.
class ValueSet {
 public:
  /// Sorts and validates; throws Error on duplicates or fewer than two elements.
  explicit ValueSet(std::vector<Rational> elements);

  /// Parses `{r1,r2,...}`. Throws ParseError.
  static ValueSet parse(std::string_view text);

  std::span<const Rational> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Rational& value) const;
  /// Position of `value` in sorted order, or -1.
  long index_of(const Rational& value) const;

  std::string str() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  std::vector<Rational> elements_;
};

}  // namespace slicekit
