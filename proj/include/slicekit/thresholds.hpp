#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "slicekit/univariate.hpp"
#include "slicekit/value_set.hpp"

namespace slicekit {

/// Searches for a non-constant P of degree ≤ d with P(0), ..., P(L) all in A.
///
/// Value tuples (P(0), ..., P(d)) range over A^(d+1) in lexicographic order of
/// A's sorted elements; the first tuple that extends to L is returned as a
/// polynomial certificate. Requires d ≥ 1 and L ≥ d.
std::optional<UnivariatePoly> find_nonconstant_witness(const ValueSet& A, int d, long L);

/// W(A,d): least W such that every degree-≤d P with P(0..W) ⊆ A is constant.
/// Always satisfies d < W ≤ |A|·d; a result outside that range throws Error(Internal).
long compute_W(const ValueSet& A, int d);

struct KValue {
  long value = 0;
  std::set<int> attaining_s;

  friend bool operator==(const KValue&, const KValue&) = default;
};

/// k(A,d) = d + max over 1 ≤ s ≤ d of ⌊d/s⌋·(W(A,s) − s), with every maximizing s.
KValue compute_k(const ValueSet& A, int d);

/// κ(A,d) as the three-way maximum over the (d+1), e + W(A,d−e) and
/// d − rs + r·W(A,s) conditions, evaluated literally.
long compute_kappa(const ValueSet& A, int d);

/// Length of the longest arithmetic progression contained in A (at least 2).
long longest_ap(const ValueSet& A);

struct ThresholdRow {
  ValueSet A;
  int d = 0;
  long W = 0;
  long k = 0;
  long kappa = 0;
  std::set<int> attaining_s{};

  friend bool operator==(const ThresholdRow&, const ThresholdRow&) = default;
};

/// One row per (A, d) for d = 1..d_max, sets in input order.
/// Throws Error(Internal) if κ and k ever disagree.
std::vector<ThresholdRow> build_table(const std::vector<ValueSet>& sets, int d_max);

/// Memoizes W(A, s) for a fixed A.
class WCache {
 public:
  explicit WCache(const ValueSet& A) : A_(A) {}
  long operator()(int s);

 private:
  const ValueSet& A_;
  std::map<int, long> values_;
};

KValue compute_k(WCache& W, int d);
long compute_kappa(WCache& W, int d);

}  // namespace slicekit
