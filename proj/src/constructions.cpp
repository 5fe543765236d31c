#include "slicekit/constructions.hpp"

#include <vector>

#include "slicekit/error.hpp"
#include "slicekit/thresholds.hpp"

namespace slicekit {
namespace {

// P(Σ_i x_{B_i}) as a multilinear polynomial: on 0/1 inputs C(y, j) is the
// j-th elementary symmetric polynomial in the block monomials.
MultilinearPoly compose_with_block_count(const UnivariatePoly& P, const std::vector<Mask>& blocks, int n) {
  const int deg = P.degree();
  std::vector<Rational> values;
  for (int w = 0; w <= deg; ++w) values.push_back(evaluate(P, w));
  const auto diffs = forward_differences(values);
  MultilinearPoly out(n);
  const int count = static_cast<int>(blocks.size());
  for (int j = 0; j <= deg && j <= count; ++j) {
    if (diffs[j].is_zero()) continue;
    for_each_subset(count, j, [&](Mask chosen) {
      Mask S = 0;
      for (Mask c = chosen; c; c &= c - 1) S |= blocks[std::countr_zero(c)];
      out.add_term(S, diffs[j]);
    });
  }
  return out;
}

void check_values(const ValueSet& A, const UnivariatePoly& P, long last) {
  for (long w = 0; w <= last; ++w) {
    const Rational v = evaluate(P, w);
    if (!A.contains(v))
      throw Error(ErrorKind::Input, "P(w) not in A at w = " + std::to_string(w) + " (P(w) = " + v.str() + ")");
  }
}

MultilinearPoly gated(const Rational& a, Mask gate, const MultilinearPoly& inner, int n) {
  // a(1 − x_gate) + x_gate·inner
  MultilinearPoly out = MultilinearPoly::constant(n, a);
  out -= MultilinearPoly::monomial(n, gate, a);
  out += MultilinearPoly::monomial(n, gate) * inner;
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::BlockSum: return "block_sum";
    case Family::Gate: return "gate";
    case Family::BlockGate: return "block_gate";
  }
  return "?";
}

MultilinearPoly construct_block_sum(const Rational& a, const Rational& b, int k, int m) {
  if (a == b) throw Error(ErrorKind::Input, "degenerate construction");
  if (k < 1 || m < 1) throw Error(ErrorKind::Input, "block_sum needs k >= 1 and m >= 1");
  const int n = 2 * k * m;
  if (n > kMaxVariables) throw Error(ErrorKind::Input, "block_sum needs 2km <= " + std::to_string(kMaxVariables));
  MultilinearPoly out = MultilinearPoly::constant(n, a);
  for (int i = 1; i <= m; ++i) out.add_term(range_mask((i - 1) * k + 1, i * k), b - a);
  return out;
}

MultilinearPoly construct_gate(const ValueSet& A, const Rational& a, int e, const UnivariatePoly& P, int m,
                               int k) {
  return construct_block_gate(A, a, e, 1, P, m, k);
}

MultilinearPoly construct_block_gate(const ValueSet& A, const Rational& a, int t, int r, const UnivariatePoly& P,
                                     int m, int k) {
  if (t < 0 || r < 1) throw Error(ErrorKind::Input, "block_gate needs t >= 0 and r >= 1");
  if (!A.contains(a)) throw Error(ErrorKind::Input, "gate value a = " + a.str() + " is not in A");
  if (is_constant(P)) throw Error(ErrorKind::Input, "witness polynomial is constant");
  if (k < t) throw Error(ErrorKind::Input, "k must be at least the gate size");
  if (m < k - t) throw Error(ErrorKind::Input, "need m >= k - t (m = " + std::to_string(m) + ")");
  const int n = t + 2 * r * m;
  if (n > kMaxVariables) throw Error(ErrorKind::Input, "construction needs more than " + std::to_string(kMaxVariables) + " variables");
  check_values(A, P, (k - t) / r);
  std::vector<Mask> blocks;
  for (int i = 1; i <= m; ++i) blocks.push_back(range_mask(t + (i - 1) * r + 1, t + i * r));
  return gated(a, prefix_mask(t), compose_with_block_count(P, blocks, n), n);
}

Counterexample best_counterexample(const ValueSet& A, int d, int k, int m) {
  if (d < 1) throw Error(ErrorKind::Input, "d must be at least 1");
  if (k < 1) throw Error(ErrorKind::Input, "k must be at least 1");
  if (m < 1) throw Error(ErrorKind::Input, "m must be at least 1");
  if (k >= compute_k(A, d).value) throw Error(ErrorKind::Domain, "no counterexample exists at this k");

  CounterexampleSpec spec{.family = Family::BlockSum, .A = A};
  spec.d = d;
  spec.k = k;
  spec.m = m;
  spec.a = A[0];
  spec.b = A[1];

  if (k <= d) {
    spec.family = Family::BlockSum;
    spec.blocks = m;
    spec.s = k;
    spec.n = 2 * k * m;
    spec.I = prefix_mask(k * m);
    spec.J = range_mask(k * m + 1, 2 * k * m);
    return {spec, construct_block_sum(spec.a, spec.b, k, m)};
  }

  for (int e = 0; e <= d - 1; ++e) {
    auto P = find_nonconstant_witness(A, d - e, k - e);
    if (!P) continue;
    spec.family = Family::Gate;
    spec.e = spec.t = e;
    spec.s = d - e;
    spec.blocks = std::max(m, k - e);
    spec.witness_poly = *P;
    spec.n = e + 2 * spec.blocks;
    spec.I = range_mask(e + 1, e + spec.blocks);
    spec.J = range_mask(e + spec.blocks + 1, e + 2 * spec.blocks);
    return {spec, construct_gate(A, spec.a, e, *P, spec.blocks, k)};
  }

  for (int t = 0; t <= d; ++t) {
    for (int r = 1; t + r <= d; ++r) {
      for (int s = 1; t + r * s <= d; ++s) {
        auto P = find_nonconstant_witness(A, s, (k - t) / r);
        if (!P) continue;
        spec.family = Family::BlockGate;
        spec.t = t;
        spec.r = r;
        spec.s = s;
        spec.blocks = std::max(m, k - t);
        spec.witness_poly = *P;
        spec.n = t + 2 * r * spec.blocks;
        spec.I = range_mask(t + 1, t + r * spec.blocks);
        spec.J = range_mask(t + r * spec.blocks + 1, t + 2 * r * spec.blocks);
        return {spec, construct_block_gate(A, spec.a, t, r, *P, spec.blocks, k)};
      }
    }
  }
  throw Error(ErrorKind::Internal, "k < k(A,d) but no threshold condition is violated");
}

std::map<Rational, SliceTable> indicator_decomposition(const SliceTable& f, const ValueSet& A) {
  const auto check = is_A_valued(f, A);
  if (!check.ok)
    throw Error(ErrorKind::Domain, "function is not A-valued at point " + format_mask(*check.counterexample) +
                                       " (value " + f.at(*check.counterexample).str() + ")");
  std::map<Rational, SliceTable> out;
  for (const Rational& a : A.elements()) {
    std::vector<Rational> values;
    values.reserve(f.values().size());
    for (const Rational& v : f.values()) {
      Rational prod(1);
      for (const Rational& b : A.elements())
        if (b != a) prod *= (v - b) / (a - b);
      values.push_back(std::move(prod));
    }
    out.emplace(a, SliceTable(f.domain(), std::move(values)));
  }
  return out;
}

}  // namespace slicekit
