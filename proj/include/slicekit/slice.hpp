#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "slicekit/combinatorics.hpp"
#include "slicekit/rational.hpp"
#include "slicekit/value_set.hpp"

namespace slicekit {

/// Refuse to materialize tables larger than this (overridable through the
/// SLICEKIT_MAX_TABLE environment variable).
inline constexpr std::uint64_t kDefaultMaxTable = 1'000'000;
std::uint64_t max_table_size();

/// The slice ([n] choose k): 0/1 vectors of length n with exactly k ones.
/// Points are masks; the canonical order is colexicographic on the 1-sets.
class SliceDomain {
 public:
  SliceDomain(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return binomial(n_, k_); }

  /// Throws Error(Guard) when size() exceeds max_table_size().
  void check_guard() const;

  std::vector<Mask> points() const;
  std::uint64_t rank(Mask point) const noexcept { return colex_rank(point); }
  bool contains(Mask point) const noexcept {
    return popcount(point) == k_ && (point >> n_) == 0;
  }

  friend bool operator==(const SliceDomain&, const SliceDomain&) = default;

 private:
  int n_;
  int k_;
};

/// Orders monomials by degree, then colex within a degree.
struct MonomialOrder {
  bool operator()(Mask a, Mask b) const noexcept {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  }
};

/// Multilinear polynomial Σ c(S) x_S over x_1..x_n. Zero coefficients are never stored.
class MultilinearPoly {
 public:
  using Terms = std::map<Mask, Rational, MonomialOrder>;

  explicit MultilinearPoly(int n);

  static MultilinearPoly constant(int n, const Rational& c);
  static MultilinearPoly monomial(int n, Mask S, const Rational& c = Rational(1));

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;

  Rational coefficient(Mask S) const;
  void add_term(Mask S, const Rational& c);

  MultilinearPoly& operator+=(const MultilinearPoly& o);
  MultilinearPoly& operator-=(const MultilinearPoly& o);
  MultilinearPoly& operator*=(const Rational& c);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  /// Product with x_i^2 = x_i applied.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Polynomial with integer powers, before multilinearization.
struct RawTerm {
  Rational coefficient;
  std::map<int, int> powers;  // 1-based variable index -> exponent ≥ 1
};

struct RawPoly {
  std::vector<RawTerm> terms;
  int max_index() const;
};

/// Replaces every x_i^p (p ≥ 1) by x_i and collects terms.
MultilinearPoly multilinearize(const RawPoly& p, int n);

/// Exact value at a 0/1 point. Throws Error if the point has coordinates beyond n.
Rational evaluate_on_point(const MultilinearPoly& p, Mask x);

/// Exhaustive value table over a slice in canonical order.
class SliceTable {
 public:
  SliceTable(SliceDomain domain, std::vector<Rational> values);

  const SliceDomain& domain() const noexcept { return domain_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& at(Mask point) const { return values_[domain_.rank(point)]; }

  friend bool operator==(const SliceTable&, const SliceTable&) = default;

 private:
  SliceDomain domain_;
  std::vector<Rational> values_;
};

SliceTable truth_table(const MultilinearPoly& p, const SliceDomain& dom);

/// SliceTable from any point function.
SliceTable tabulate(const SliceDomain& dom, const std::function<Rational(Mask)>& f);

/// Degree-exactly-d representation equal to `p` on every point of `dom`, using
/// x_S = Σ_{S ⊆ T, |T| = d} x_T / C(k − |S|, d − |S|).
MultilinearPoly homogenize(const MultilinearPoly& p, const SliceDomain& dom, int d);

/// Minimal d such that f agrees with some polynomial of degree ≤ d on the slice.
int slice_degree(const SliceTable& f);

/// Whether f lies in the span of degree-≤d monomials over its slice.
bool has_degree_at_most(const SliceTable& f, int d);

/// Membership of f in the span of degree-d monomials, decided by fraction-free
/// elimination on the full evaluation matrix (requires k ≥ d).
bool in_monomial_span_by_elimination(const SliceTable& f, int d);

/// Rank of the C(n,k) × C(n,d) evaluation matrix of the degree-d monomials.
std::size_t evaluation_matrix_rank(const SliceDomain& dom, int d);

struct AValuedResult {
  bool ok = true;
  std::optional<Mask> counterexample;
};

AValuedResult is_A_valued(const SliceTable& f, const ValueSet& A);

/// f̄(x) = f(1 − x), a table on ([n] choose n − k).
SliceTable dual(const SliceTable& f);

}  // namespace slicekit
