#include <doctest.h>

#include "slicekit/error.hpp"
#include "slicekit/poly_text.hpp"
#include "slicekit/recovery.hpp"
#include "slicekit/slice.hpp"
#include "support.hpp"

using namespace slicekit;

namespace {

Mask set(std::initializer_list<int> idx) { return indices_mask(std::vector<int>(idx)); }

// 3 − 2 Σ_{i≤m} x_i + Σ_{i<j≤m} x_i x_j on n variables.
MultilinearPoly gate_example(int n, int m) {
  MultilinearPoly p = MultilinearPoly::constant(n, 3);
  for (int i = 1; i <= m; ++i) p.add_term(set({i}), -2);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) p.add_term(set({i, j}), 1);
  return p;
}

}  // namespace

TEST_CASE("combinatorics: colex order and ranks") {
  std::vector<Mask> pts;
  for_each_subset(4, 2, [&](Mask m) { pts.push_back(m); });
  const std::vector<Mask> expected{set({1, 2}), set({1, 3}), set({2, 3}), set({1, 4}), set({2, 4}), set({3, 4})};
  CHECK(pts == expected);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(colex_rank(pts[i]) == i);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(binomial(5, 7) == 0);
  std::size_t count = 0;
  for_each_subset(10, 0, [&](Mask m) { CHECK(m == 0); ++count; });
  CHECK(count == 1);
}

TEST_CASE("slice domain basics and guard") {
  const SliceDomain dom(3, 1);
  CHECK(dom.points() == std::vector<Mask>{set({1}), set({2}), set({3})});
  CHECK_THROWS_WITH_AS(SliceDomain(4, 5), "k > n", Error);
  CHECK_THROWS_AS(SliceDomain(40, 20).points(), Error);
  try {
    SliceDomain(40, 20).check_guard();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Guard);
  }
}

TEST_CASE("multilinearize") {
  RawPoly square{{{Rational(1), {{1, 2}}}}};
  CHECK(multilinearize(square, 1) == MultilinearPoly::monomial(1, set({1})));

  RawPoly mixed{{{Rational(1), {{1, 2}, {2, 1}}}, {Rational(1), {{1, 1}, {2, 1}}}}};
  const auto p = multilinearize(mixed, 2);
  CHECK(p == MultilinearPoly::monomial(2, set({1, 2}), 2));
  // Agrees with the raw polynomial on all four 0/1 assignments.
  for (Mask x = 0; x < 4; ++x) {
    const long x1 = x & 1, x2 = (x >> 1) & 1;
    CHECK(evaluate_on_point(p, x) == Rational(x1 * x1 * x2 + x1 * x2));
  }

  RawPoly constant{{{Rational(5), {}}}};
  CHECK(multilinearize(constant, 3) == MultilinearPoly::constant(3, 5));
  CHECK_THROWS_AS(multilinearize(square, 0), Error);
}

TEST_CASE("evaluate_on_point") {
  CHECK(evaluate_on_point(MultilinearPoly::monomial(5, set({1, 2})), set({1, 2})) == Rational(1));
  const auto p = gate_example(9, 9);
  CHECK(evaluate_on_point(p, set({1, 3, 5, 7, 9})) == Rational(3));
  const int n = 6, k = 4;
  MultilinearPoly avg(n);
  for (int i = 1; i <= n; ++i) avg.add_term(set({i}), Rational(1, k));
  for_each_subset(n, k, [&](Mask x) { CHECK(evaluate_on_point(avg, x) == Rational(1)); });
  CHECK_THROWS_AS(evaluate_on_point(MultilinearPoly(2), set({3})), Error);
}

TEST_CASE("truth_table") {
  const auto dict = truth_table(MultilinearPoly::monomial(3, set({1})), SliceDomain(3, 1));
  CHECK(dict.values() == std::vector<Rational>{1, 0, 0});
  const auto ones = truth_table(MultilinearPoly::constant(5, 1), SliceDomain(5, 2));
  CHECK(std::all_of(ones.values().begin(), ones.values().end(), [](const Rational& v) { return v == Rational(1); }));
  const auto f = truth_table(gate_example(7, 7), SliceDomain(7, 5));
  CHECK(f.values().size() == 21);
  const ValueSet A = ValueSet::parse("{0,1,3}");
  for (const auto& v : f.values()) CHECK(A.contains(v));
}

TEST_CASE("homogenize examples") {
  const int n = 6, k = 3;
  const SliceDomain dom(n, k);
  const auto h = homogenize(MultilinearPoly::constant(n, 1), dom, 1);
  for (int i = 1; i <= n; ++i) CHECK(h.coefficient(set({i})) == Rational(1, k));
  CHECK(h.terms().size() == static_cast<std::size_t>(n));

  for (int d = 2; d <= 3; ++d) {
    const Mask base = prefix_mask(d - 1);
    const auto hd = homogenize(MultilinearPoly::monomial(n, base), dom, d);
    CHECK(hd.terms().size() == static_cast<std::size_t>(n - d + 1));
    for (int i = d; i <= n; ++i) CHECK(hd.coefficient(base | set({i})) == Rational(1, k - d + 1));
  }

  CHECK_THROWS_WITH_AS(homogenize(MultilinearPoly::constant(n, 1), SliceDomain(6, 1), 2),
                       "slice too small to homogenize", Error);
  CHECK_THROWS_WITH_AS(homogenize(MultilinearPoly::monomial(n, set({1, 2, 3})), dom, 2), "degree exceeds target",
                       Error);
}

TEST_CASE("property: homogenization preserves truth tables (n <= 10, exhaustive shapes)") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      for (int d = 0; d <= k; ++d) {
        const SliceDomain dom(n, k);
        const auto p = testing::random_poly(n, d, prefix_mask(n), 0.4);
        const auto h = homogenize(p, dom, d);
        for (const auto& [S, _] : h.terms()) CHECK(popcount(S) == d);
        CHECK(truth_table(h, dom) == truth_table(p, dom));
      }
}

TEST_CASE("uniqueness: degree-d monomials are independent when n - k >= d") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int d = 0; d <= std::min(k, n - k); ++d)
        CHECK(evaluation_matrix_rank(SliceDomain(n, k), d) == binomial(n, d));
  // Random pairs of homogeneous polynomials: different coefficients give different tables.
  const SliceDomain dom(7, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = homogenize(testing::random_poly(7, 2, prefix_mask(7)), dom, 2);
    auto q = p;
    if (trial % 2) q.add_term(set({static_cast<int>(testing::uniform(1, 3)), 5}), testing::random_rational() + 10);
    CHECK((truth_table(p, dom) == truth_table(q, dom)) == (p == q));
  }
}

TEST_CASE("degeneracy: C * prod (1 - x_i) vanishes when n - k < d") {
  const int n = 5, k = 3, d = 3;
  for (const Rational C : {Rational(1), Rational(-7, 2), Rational(100)}) {
    MultilinearPoly p = MultilinearPoly::constant(n, C);
    for (int i = 1; i <= d; ++i) {
      MultilinearPoly factor = MultilinearPoly::constant(n, 1);
      factor.add_term(set({i}), -1);
      p = p * factor;
    }
    CHECK(p.degree() == d);
    const auto f = truth_table(p, SliceDomain(n, k));
    for (const auto& v : f.values()) CHECK(v == Rational(0));
  }
}

TEST_CASE("slice_degree examples") {
  CHECK(slice_degree(truth_table(MultilinearPoly::constant(5, 4), SliceDomain(5, 2))) == 0);
  CHECK(slice_degree(truth_table(MultilinearPoly::monomial(4, set({1})), SliceDomain(4, 2))) == 1);
  // With m = n the gate example is the constant 3 on the weight-5 slice.
  CHECK(slice_degree(truth_table(gate_example(7, 7), SliceDomain(7, 5))) == 0);
  CHECK(slice_degree(truth_table(gate_example(7, 5), SliceDomain(7, 5))) == 2);
  CHECK(slice_degree(truth_table(gate_example(12, 6), SliceDomain(12, 5))) == 2);
}

TEST_CASE("property: slice_degree matches the definitional oracle and both span routes agree") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(testing::uniform(2, 7));
    const int k = static_cast<int>(testing::uniform(0, n));
    const SliceDomain dom(n, k);
    const bool boolean = trial % 2 == 0;
    const SliceTable f = boolean ? testing::random_table(dom, ValueSet::parse("{0,1}"))
                                 : truth_table(testing::random_poly(n, static_cast<int>(testing::uniform(0, 3)),
                                                                    prefix_mask(n), 0.3),
                                               dom);
    const int deg = slice_degree(f);
    CHECK(deg == testing::brute_slice_degree(f));
    CHECK(deg == slice_degree(dual(f)));
    for (int d = 0; d < std::min(k, n - k); ++d)
      CHECK(in_monomial_span_by_elimination(f, d) == try_extract_coefficients(f, d).has_value());
  }
}

TEST_CASE("is_A_valued") {
  const ValueSet bits = ValueSet::parse("{0,1}");
  CHECK(is_A_valued(SliceTable(SliceDomain(4, 2), std::vector<Rational>(6, 0)), bits).ok);
  MultilinearPoly avg(5);
  for (int i = 1; i <= 5; ++i) avg.add_term(set({i}), Rational(1, 2));
  CHECK(is_A_valued(truth_table(avg, SliceDomain(5, 2)), bits).ok);

  const auto bad = is_A_valued(truth_table(gate_example(7, 7), SliceDomain(7, 6)), ValueSet::parse("{0,1,3}"));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample);
  CHECK(*bad.counterexample == prefix_mask(6));
  CHECK(evaluate_on_point(gate_example(7, 7), prefix_mask(6)) == Rational(6));
}

TEST_CASE("dual") {
  const auto f = truth_table(MultilinearPoly::monomial(3, set({1})), SliceDomain(3, 1));
  const auto g = dual(f);
  CHECK(g.domain() == SliceDomain(3, 2));
  MultilinearPoly one_minus = MultilinearPoly::constant(3, 1);
  one_minus.add_term(set({1}), -1);
  CHECK(g == truth_table(one_minus, SliceDomain(3, 2)));

  const SliceTable c(SliceDomain(5, 2), std::vector<Rational>(10, Rational(7, 3)));
  CHECK(dual(c).values() == std::vector<Rational>(10, Rational(7, 3)));

  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(testing::uniform(1, 8));
    const SliceDomain dom(n, static_cast<int>(testing::uniform(0, n)));
    const auto t = testing::random_table(dom, ValueSet::parse("{-1,0,2}"));
    CHECK(dual(dual(t)) == t);
  }
}

TEST_CASE("polynomial text grammar") {
  const auto p = parse_poly("3 - 2*x{1} + 1/2*x{1,2}");
  CHECK(p.n() == 2);
  CHECK(p.coefficient(0) == Rational(3));
  CHECK(p.coefficient(set({1})) == Rational(-2));
  CHECK(p.coefficient(set({1, 2})) == Rational(1, 2));
  CHECK(format_poly(p) == "3 - 2*x{1} + 1/2*x{1,2}");

  CHECK(format_poly(parse_poly(" - x{2} ", 3)) == "-x{2}");
  CHECK(format_poly(parse_poly("x{1}^3 * x{2} + x{1,1}", 2)) == "x{1} + x{1,2}");
  CHECK(format_poly(parse_poly("x{1}*x{2} - x{2,1}")) == "0");
  CHECK(format_poly(parse_poly("2*3*x{1}\n  + 1 / 4")) == "1/4 + 6*x{1}");

  CHECK_THROWS_AS(parse_poly("3 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x{0}"), ParseError);
  CHECK_THROWS_AS(parse_poly("y{1}"), ParseError);
  CHECK_THROWS_AS(parse_poly("x{1,}"), ParseError);
  CHECK_THROWS_AS(parse_poly("x{5}", 3), Error);
  try {
    parse_poly("1 +\n  2 * q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("property: text form round trips") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_poly(6, 3, prefix_mask(6), 0.3);
    CHECK(parse_poly(format_poly(p), 6) == p);
  }
}
