// Shared generators and independent oracles for the test suites. Nothing here
// calls into the code path it is used to check.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "slicekit/combinatorics.hpp"
#include "slicekit/junta.hpp"
#include "slicekit/slice.hpp"
#include "slicekit/univariate.hpp"
#include "slicekit/value_set.hpp"

namespace slicekit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 9, long max_den = 6) {
  return Rational(uniform(-span, span), uniform(1, max_den));
}

/// Random multilinear polynomial over x_1..x_n with degree ≤ d, supported on `vars`.
inline MultilinearPoly random_poly(int n, int d, Mask vars, double density = 0.5) {
  MultilinearPoly p(n);
  std::bernoulli_distribution keep(density);
  for (int s = 0; s <= d; ++s)
    for_each_subset_of(vars, s, [&](Mask S) {
      if (keep(rng())) p.add_term(S, random_rational());
    });
  return p;
}

inline SliceTable random_table(const SliceDomain& dom, const ValueSet& A) {
  std::vector<Rational> values;
  for (std::uint64_t i = 0; i < dom.size(); ++i) values.push_back(A[uniform(0, static_cast<long>(A.size()) - 1)]);
  return SliceTable(dom, std::move(values));
}

/// Plain Gauss–Jordan rank over the rationals.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Degree on the slice from the definition: smallest d such that f lies in the
/// span of ALL monomials of degree ≤ d (no homogenization involved).
inline int brute_slice_degree(const SliceTable& f) {
  const auto points = f.domain().points();
  for (int d = 0;; ++d) {
    std::vector<Mask> monos;
    for (int s = 0; s <= d; ++s) for_each_subset(f.domain().n(), s, [&](Mask S) { monos.push_back(S); });
    std::vector<std::vector<Rational>> plain, aug;
    for (std::size_t r = 0; r < points.size(); ++r) {
      std::vector<Rational> row;
      for (Mask S : monos) row.emplace_back((S & points[r]) == S ? 1 : 0);
      plain.push_back(row);
      row.push_back(f.values()[r]);
      aug.push_back(row);
    }
    if (gauss_rank(plain) == gauss_rank(aug)) return d;
  }
}

/// Pair count behind the transfer matrix, by explicit enumeration: S = {1..d},
/// I = {d+1..d+k}, T = first e' elements of S plus first d−e' elements of I.
inline std::uint64_t brute_transfer_entry(int k, int d, int e, int ep) {
  const Mask S = prefix_mask(d);
  const Mask I = range_mask(d + 1, d + k);
  if (ep > d || d - ep > k) return 0;
  const Mask T = prefix_mask(ep) | range_mask(d + 1, d + (d - ep));
  std::uint64_t count = 0;
  for (Mask Sp = 0; Sp <= S; ++Sp) {
    if ((Sp & ~S) || popcount(Sp) != e) continue;
    for (Mask rest = 0; rest < (Mask{1} << k); ++rest) {
      if (popcount(rest) != k - e) continue;
      const Mask Ip = rest << d;
      if ((T & (Sp | Ip)) == T) ++count;
    }
  }
  (void)I;
  return count;
}

/// Minimum vertex cover by trying every subset in increasing size.
inline Mask brute_vertex_cover(const SensitivityGraph& g) {
  for (int size = 0; size <= g.n; ++size) {
    std::optional<Mask> found;
    for_each_subset(g.n, size, [&](Mask C) {
      if (found) return;
      if (is_junta_on(g, C)) found = C;
    });
    if (found) return *found;
  }
  return prefix_mask(g.n);
}

/// Non-constant degree-≤d witness search using Lagrange interpolation and
/// direct evaluation only.
inline bool brute_has_witness(const ValueSet& A, int d, long L) {
  std::vector<std::size_t> idx(d + 1, 0);
  while (true) {
    std::vector<IntegerPoint> pts;
    for (int i = 0; i <= d; ++i) pts.emplace_back(i, A[idx[i]]);
    const UnivariatePoly P = interpolate(pts);
    if (!is_constant(P)) {
      bool ok = true;
      for (long x = d + 1; x <= L && ok; ++x) ok = A.contains(evaluate(P, x));
      if (ok) return true;
    }
    int pos = d;
    while (pos >= 0 && ++idx[pos] == A.size()) idx[pos--] = 0;
    if (pos < 0) return false;
  }
}

inline long brute_W(const ValueSet& A, int d) {
  for (long W = d + 1;; ++W)
    if (!brute_has_witness(A, d, W)) return W;
}

/// Swap sensitivity straight from a polynomial, without tables.
inline bool brute_sensitive(const MultilinearPoly& p, const SliceDomain& dom, int i, int j) {
  for (Mask x : dom.points()) {
    const Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
    if (((x & bi) != 0) == ((x & bj) != 0)) continue;
    if (evaluate_on_point(p, x) != evaluate_on_point(p, x ^ bi ^ bj)) return true;
  }
  return false;
}

}  // namespace slicekit::testing
