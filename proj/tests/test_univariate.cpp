#include <doctest.h>

#include "slicekit/error.hpp"
#include "slicekit/univariate.hpp"
#include "support.hpp"

using namespace slicekit;

namespace {

// 3 − 2x + x(x−1)/2, the gate polynomial taking {0,1,3} values on 0..5.
UnivariatePoly gate_poly() { return UnivariatePoly({Rational(3), Rational(-5, 2), Rational(1, 2)}); }

}  // namespace

TEST_CASE("interpolate: constant data gives a constant") {
  const std::vector<IntegerPoint> pts{{0, 5}, {1, 5}, {2, 5}};
  const auto P = interpolate(pts);
  CHECK(P == UnivariatePoly::constant(5));
  CHECK(is_constant(P));
}

TEST_CASE("interpolate: x(x-1)/2 through (0,0),(1,0),(2,1)") {
  const std::vector<IntegerPoint> pts{{0, 0}, {1, 0}, {2, 1}};
  const auto P = interpolate(pts);
  CHECK(evaluate(P, 3) == Rational(3));
  CHECK(P == UnivariatePoly({Rational(0), Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("interpolate: step polynomial a..a,b matches the product formula") {
  for (int d = 1; d <= 5; ++d) {
    const Rational a(2), b(-7, 3);
    std::vector<IntegerPoint> pts;
    for (int i = 0; i < d; ++i) pts.emplace_back(i, a);
    pts.emplace_back(d, b);
    const auto P = interpolate(pts);
    // a + (b − a)·Π_{i<d} (x − i)/(d − i)
    UnivariatePoly expected = UnivariatePoly::constant(1);
    for (int i = 0; i < d; ++i)
      expected = expected * UnivariatePoly({Rational(-i), Rational(1)}) * UnivariatePoly::constant(Rational(1, d - i));
    expected = UnivariatePoly::constant(a) + expected * UnivariatePoly::constant(b - a);
    CHECK(P == expected);
    CHECK(P.degree() == d);
  }
}

TEST_CASE("interpolate: duplicate abscissae are rejected") {
  const std::vector<IntegerPoint> pts{{0, 1}, {0, 2}};
  CHECK_THROWS_WITH_AS(interpolate(pts), "degenerate interpolation input", Error);
  CHECK_THROWS_AS(interpolate(std::vector<IntegerPoint>{}), Error);
}

TEST_CASE("evaluate: gate polynomial") {
  const auto P = gate_poly();
  CHECK(evaluate(P, 5) == Rational(3));
  const std::vector<Rational> expected{3, 1, 0, 0, 1, 3};
  for (int x = 0; x <= 5; ++x) CHECK(evaluate(P, x) == expected[x]);
  CHECK(evaluate(P, 6) == Rational(6));
  CHECK(evaluate(UnivariatePoly(), 17) == Rational(0));
}

TEST_CASE("is_constant") {
  CHECK(is_constant(UnivariatePoly::constant(7)));
  CHECK(is_constant(UnivariatePoly()));
  CHECK_FALSE(is_constant(UnivariatePoly::identity()));
  const std::vector<IntegerPoint> pts{{0, 0}, {1, 1}};
  CHECK_FALSE(is_constant(interpolate(pts)));
}

TEST_CASE("property: interpolation round trip on random points") {
  for (int trial = 0; trial < 200; ++trial) {
    const int count = static_cast<int>(testing::uniform(1, 8));
    std::vector<long> xs;
    while (static_cast<int>(xs.size()) < count) {
      const long x = testing::uniform(-10, 10);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::vector<IntegerPoint> pts;
    for (long x : xs) pts.emplace_back(x, testing::random_rational(20, 9));
    const auto P = interpolate(pts);
    CHECK(P.degree() < count);
    for (const auto& [x, v] : pts) CHECK(evaluate(P, x) == v);
  }
}

TEST_CASE("property: interpolation recovers a polynomial's coefficients") {
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(testing::uniform(0, 6));
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(testing::random_rational());
    const UnivariatePoly Q(coeffs);
    std::vector<IntegerPoint> pts;
    for (int x = 0; x <= d; ++x) pts.emplace_back(x - 2, evaluate(Q, x - 2));
    CHECK(interpolate(pts) == Q);
  }
}

TEST_CASE("forward differences and Newton form agree with interpolation") {
  const std::vector<Rational> values{3, 1, 0, 0};
  const auto diffs = forward_differences(values);
  CHECK(diffs == std::vector<Rational>{3, -2, 1, 0});
  CHECK(from_newton_binomial(diffs) == gate_poly());
}
