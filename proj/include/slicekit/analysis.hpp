#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "slicekit/constructions.hpp"
#include "slicekit/junta.hpp"
#include "slicekit/recovery.hpp"
#include "slicekit/value_set.hpp"

namespace slicekit {

struct AnalysisReport {
  SliceDomain domain{1, 0};
  int degree = 0;
  std::optional<ValueSet> A;
  AValuedResult a_valued;
  std::size_t expansion_terms = 0;
  SparseRepresentation sparse;
  JuntaReport junta;
};

/// Degree, A-valuedness, recovery pipeline and minimum junta of p on the slice.
/// The expansion is taken at degree `d` if given, otherwise at the slice degree.
AnalysisReport analyze(const MultilinearPoly& p, const SliceDomain& dom, const std::optional<ValueSet>& A,
                       std::optional<int> d = std::nullopt);

/// A counterexample together with the checks that certify it.
struct ConstructionBundle {
  Counterexample example;
  bool a_valued = false;
  int degree = 0;
  long lower_bound = 0;  // from the I, J certificate
  JuntaReport junta;

  /// A-valued, degree ≤ d, and both the certificate and the detector exceed m − 1.
  bool certified() const;
};

ConstructionBundle construct_certified(const ValueSet& A, int d, int k, int m);

struct Violation {
  std::vector<Rational> values;
  int min_junta = 0;
};

struct VerificationReport {
  SliceDomain domain{1, 0};
  std::optional<ValueSet> A;
  int d = 0;
  int bound = 0;
  std::uint64_t functions_scanned = 0;
  std::uint64_t degree_le_d_count = 0;
  int max_min_junta = 0;
  std::vector<Violation> violations;
};

/// Hard cap on |A|^C(n,k) for exhaustive enumeration.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

using ProgressFn = std::function<void(std::uint64_t scanned, std::uint64_t total)>;

/// Enumerates every A-valued table on the slice (colex order of value vectors),
/// keeps those of degree ≤ d and records which exceed the junta bound.
VerificationReport verify_exhaustive(const SliceDomain& dom, int d, const ValueSet& A, int bound,
                                     const ProgressFn& progress = {});

struct DecompositionReport {
  std::map<Rational, SliceTable> indicators;
  bool all_boolean = false;
  bool reconstructs = false;
};

DecompositionReport decompose(const SliceTable& f, const ValueSet& A);

}  // namespace slicekit
