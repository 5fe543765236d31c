#include "slicekit/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "slicekit/error.hpp"

namespace slicekit {

AnalysisReport analyze(const MultilinearPoly& p, const SliceDomain& dom, const std::optional<ValueSet>& A,
                       std::optional<int> d) {
  dom.check_guard();
  const SliceTable f = truth_table(p, dom);
  AnalysisReport report;
  report.domain = dom;
  report.degree = slice_degree(f);
  report.A = A;
  if (A) report.a_valued = is_A_valued(f, *A);
  const int level = d.value_or(report.degree);
  if (level < report.degree) throw Error(ErrorKind::Input, "requested degree is below the slice degree");
  const HomogeneousExpansion E = extract_coefficients(f, level);
  report.expansion_terms = E.coeffs.size();
  report.sparse = sparsify(bunching_assign(E));
  report.junta = minimum_junta(f);
  return report;
}

bool ConstructionBundle::certified() const {
  const int m = example.spec.m;
  return a_valued && degree <= example.spec.d && lower_bound >= m && junta.min_size >= m &&
         junta.min_size >= lower_bound;
}

ConstructionBundle construct_certified(const ValueSet& A, int d, int k, int m) {
  ConstructionBundle bundle{best_counterexample(A, d, k, m), false, 0, 0, {}};
  const auto& spec = bundle.example.spec;
  const SliceDomain dom(spec.n, k);
  dom.check_guard();
  const SliceTable f = truth_table(bundle.example.poly, dom);
  bundle.a_valued = is_A_valued(f, A).ok;
  bundle.degree = slice_degree(f);
  const SensitivityGraph g = sensitivity_graph(f);
  bundle.lower_bound = junta_lower_bound(g, spec.I, spec.J);
  const Mask cover = minimum_vertex_cover(g);
  bundle.junta = JuntaReport{popcount(cover), cover, g.edges};
  return bundle;
}

VerificationReport verify_exhaustive(const SliceDomain& dom, int d, const ValueSet& A, int bound,
                                     const ProgressFn& progress) {
  const std::uint64_t points = dom.size();
  const double log_total = static_cast<double>(points) * std::log2(static_cast<double>(A.size()));
  if (log_total > 24.0 + 1e-9)
    throw Error(ErrorKind::Guard, "exhaustive scan needs |A|^C(n,k) <= 2^24; this domain needs 2^" +
                                      std::to_string(log_total));
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < points; ++i) total *= A.size();

  VerificationReport report;
  report.domain = dom;
  report.A = A;
  report.d = d;
  report.bound = bound;
  std::vector<std::size_t> digits(points, 0);
  std::vector<Rational> values(points, A[0]);
  for (std::uint64_t scanned = 0; scanned < total; ++scanned) {
    const SliceTable f(dom, values);
    if (has_degree_at_most(f, d)) {
      ++report.degree_le_d_count;
      const int size = minimum_junta(f).min_size;
      report.max_min_junta = std::max(report.max_min_junta, size);
      if (size > bound) report.violations.push_back({values, size});
    }
    ++report.functions_scanned;
    const bool tick = (report.functions_scanned % (std::uint64_t{1} << 16)) == 0;
    if (progress && (tick || report.functions_scanned == total))
      progress(report.functions_scanned, total);
    // Colex successor: the first coordinate varies fastest.
    for (std::size_t i = 0; i < points; ++i) {
      if (++digits[i] < A.size()) {
        values[i] = A[digits[i]];
        break;
      }
      digits[i] = 0;
      values[i] = A[0];
    }
  }
  return report;
}

DecompositionReport decompose(const SliceTable& f, const ValueSet& A) {
  DecompositionReport report;
  report.indicators = indicator_decomposition(f, A);
  report.all_boolean = std::all_of(report.indicators.begin(), report.indicators.end(), [](const auto& kv) {
    return std::all_of(kv.second.values().begin(), kv.second.values().end(),
                       [](const Rational& v) { return v == Rational(0) || v == Rational(1); });
  });
  report.reconstructs = true;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    Rational acc;
    for (const auto& [a, table] : report.indicators) acc += a * table.values()[i];
    if (acc != f.values()[i]) report.reconstructs = false;
  }
  return report;
}

}  // namespace slicekit
