#include <doctest.h>

#include "slicekit/analysis.hpp"
#include "slicekit/error.hpp"
#include "slicekit/poly_text.hpp"
#include "slicekit/records.hpp"
#include "support.hpp"

using namespace slicekit;

namespace {

std::string gate_text(int m) {
  std::string s = "3";
  for (int i = 1; i <= m; ++i) s += " - 2*x{" + std::to_string(i) + "}";
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) s += " + x{" + std::to_string(i) + "}*x{" + std::to_string(j) + "}";
  return s;
}

}  // namespace

TEST_CASE("analyze") {
  const auto r = analyze(parse_poly("x{1}", 4), SliceDomain(4, 2), ValueSet::parse("{0,1}"));
  CHECK(r.degree == 1);
  CHECK(r.a_valued.ok);
  CHECK(r.junta.min_size == 1);
  CHECK(r.junta.witness == indices_mask({1}));

  const SliceDomain dom(12, 5);
  const auto p = parse_poly(gate_text(6), 12);
  const auto g = analyze(p, dom, ValueSet::parse("{0,1,3}"));
  CHECK(g.degree == 2);
  CHECK(g.a_valued.ok);
  const auto f = truth_table(p, dom);
  CHECK(g.junta.min_size == popcount(testing::brute_vertex_cover(sensitivity_graph(f))));
  CHECK(truth_table(g.sparse.as_poly(), dom) == f);

  const auto bad = analyze(parse_poly("2*x{1}", 4), SliceDomain(4, 2), ValueSet::parse("{0,1}"));
  CHECK_FALSE(bad.a_valued.ok);
  CHECK(bad.a_valued.counterexample == indices_mask({1, 2}));

  CHECK_THROWS_AS(analyze(parse_poly("x{1}", 40), SliceDomain(40, 20), std::nullopt), Error);
}

TEST_CASE("analysis records are deterministic") {
  const auto p = parse_poly(gate_text(4), 8);
  const auto a = write_analysis_records(analyze(p, SliceDomain(8, 3), ValueSet::parse("{0,1,3}")));
  const auto b = write_analysis_records(analyze(p, SliceDomain(8, 3), ValueSet::parse("{0,1,3}")));
  CHECK(a == b);
  CHECK(a.rfind("slicekit/1 analyze\n", 0) == 0);
}

TEST_CASE("construct_certified") {
  const auto b = construct_certified(ValueSet::parse("{0,1}"), 2, 3, 4);
  CHECK(b.a_valued);
  CHECK(b.degree <= 2);
  CHECK(b.lower_bound >= 4);
  CHECK(b.junta.min_size >= 4);
  CHECK(b.certified());

  const auto dict = construct_certified(ValueSet::parse("{0,1}"), 1, 1, 5);
  CHECK(dict.example.spec.family == Family::BlockSum);
  CHECK(dict.certified());

  try {
    construct_certified(ValueSet::parse("{0,1,3}"), 2, 6, 2);
    FAIL("expected no counterexample");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("exhaustive verification") {
  const ValueSet bits = ValueSet::parse("{0,1}");
  const auto small = verify_exhaustive(SliceDomain(4, 1), 1, bits, 1);
  CHECK(small.functions_scanned == 16);
  CHECK(small.degree_le_d_count == 16);
  CHECK_FALSE(small.violations.empty());
  CHECK(small.max_min_junta == 2);
  for (const auto& v : small.violations) CHECK(v.min_junta > 1);

  std::uint64_t last = 0;
  const auto r = verify_exhaustive(SliceDomain(6, 2), 1, bits, 1, [&](std::uint64_t s, std::uint64_t) { last = s; });
  CHECK(r.functions_scanned == 32768);
  CHECK(r.degree_le_d_count == 14);
  CHECK(r.max_min_junta == 1);
  CHECK(r.violations.empty());
  CHECK(last == 32768);

  const auto all = verify_exhaustive(SliceDomain(4, 2), 2, bits, 6);
  CHECK(all.functions_scanned == 64);
  CHECK(all.degree_le_d_count == 64);

  try {
    verify_exhaustive(SliceDomain(8, 4), 1, bits, 1);
    FAIL("expected the enumeration guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Guard);
  }
}

TEST_CASE("decompose") {
  const ValueSet A = ValueSet::parse("{0,1,3}");
  const auto f = truth_table(parse_poly(gate_text(6), 12), SliceDomain(12, 5));
  const auto r = decompose(f, A);
  CHECK(r.all_boolean);
  CHECK(r.reconstructs);
  CHECK(r.indicators.size() == 3);
  CHECK(write_decomposition_records(f, r).rfind("slicekit/1 decompose\n", 0) == 0);
}
