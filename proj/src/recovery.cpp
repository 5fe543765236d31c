#include "slicekit/recovery.hpp"

#include <algorithm>

#include "slicekit/error.hpp"

namespace slicekit {
namespace {

void check_shape(const SliceDomain& dom, int d) {
  if (d < 0 || dom.k() < d) throw Error(ErrorKind::Input, "extraction requires k >= d >= 0");
  if (dom.n() < dom.k() + d) throw Error(ErrorKind::Input, "extraction requires n >= k + d");
}

// Lowest `count` indices of [n] outside S.
Mask lowest_outside(int n, Mask S, int count) {
  Mask out = 0;
  for (int i = 0; i < n && count > 0; ++i) {
    if (S & (Mask{1} << i)) continue;
    out |= Mask{1} << i;
    --count;
  }
  return out;
}

HomogeneousExpansion extract_unchecked(const PointOracle& f, const SliceDomain& dom, int d) {
  check_shape(dom, d);
  const int n = dom.n(), k = dom.k();
  const TransferMatrix M = transfer_matrix(k, d);
  HomogeneousExpansion out{n, k, d, {}};
  std::vector<Rational> h(d + 1), gamma(d + 1);
  for_each_subset(n, d, [&](Mask S) {
    const Mask I = lowest_outside(n, S, k);
    for (int e = 0; e <= d; ++e) {
      Rational sum;
      for_each_subset_of(S, e, [&](Mask Sp) {
        for_each_subset_of(I, k - e, [&](Mask Ip) { sum += f(Sp | Ip); });
      });
      h[e] = std::move(sum);
    }
    for (int e = 0; e <= d; ++e) {
      Rational rhs = h[e];
      for (int ep = 0; ep < e; ++ep) rhs -= Rational::from_u64(M[e][ep]) * gamma[ep];
      gamma[e] = rhs / Rational::from_u64(M[e][e]);
    }
    if (!gamma[d].is_zero()) out.coeffs.emplace(S, gamma[d]);
  });
  return out;
}

// Σ_{|S| = d} c(S) x_S equals f at every slice point.
bool reproduces(const HomogeneousExpansion& E, const PointOracle& f, const SliceDomain& dom) {
  for (Mask x : dom.points()) {
    Rational acc;
    if (binomial(dom.k(), E.d) <= E.coeffs.size()) {
      for_each_subset_of(x, E.d, [&](Mask S) {
        auto it = E.coeffs.find(S);
        if (it != E.coeffs.end()) acc += it->second;
      });
    } else {
      for (const auto& [S, c] : E.coeffs)
        if ((S & x) == S) acc += c;
    }
    if (acc != f(x)) return false;
  }
  return true;
}

Rational lookup(const CoefficientMap& m, Mask S) {
  auto it = m.find(S);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

MultilinearPoly HomogeneousExpansion::as_poly() const {
  MultilinearPoly p(n);
  for (const auto& [S, c] : coeffs) p.add_term(S, c);
  return p;
}

Rational LayeredCoefficients::at(Mask T) const { return lookup(c, T); }

MultilinearPoly SparseRepresentation::as_poly() const {
  MultilinearPoly p(n);
  for (const auto& [S, c] : C) p.add_term(S, c);
  return p;
}

TransferMatrix transfer_matrix(int k, int d) {
  if (d < 0 || k < d) throw Error(ErrorKind::Input, "transfer matrix requires k >= d >= 0");
  TransferMatrix M(d + 1, std::vector<std::uint64_t>(d + 1, 0));
  for (int e = 0; e <= d; ++e)
    for (int ep = 0; ep <= e; ++ep)
      M[e][ep] = binomial(d - ep, e - ep) * binomial(k - d + ep, (k - e) - (d - ep));
  return M;
}

HomogeneousExpansion extract_coefficients(const PointOracle& f, const SliceDomain& dom, int d) {
  HomogeneousExpansion E = extract_unchecked(f, dom, d);
  if (!reproduces(E, f, dom)) throw Error(ErrorKind::Domain, "input exceeds stated degree");
  return E;
}

HomogeneousExpansion extract_coefficients(const SliceTable& f, int d) {
  return extract_coefficients([&](Mask x) { return f.at(x); }, f.domain(), d);
}

std::optional<HomogeneousExpansion> try_extract_coefficients(const SliceTable& f, int d) {
  const PointOracle oracle = [&](Mask x) { return f.at(x); };
  HomogeneousExpansion E = extract_unchecked(oracle, f.domain(), d);
  if (!reproduces(E, oracle, f.domain())) return std::nullopt;
  return E;
}

LayeredCoefficients bunching_assign(const HomogeneousExpansion& E) {
  LayeredCoefficients L{E.n, E.k, E.d, E.coeffs, std::vector<std::size_t>(E.d + 1, 0)};
  const Mask all = prefix_mask(E.n);
  for (int level = E.d - 1; level >= 0; --level) {
    for_each_subset(E.n, level, [&](Mask T) {
      std::map<Rational, std::size_t> counts;
      for (Mask rest = all & ~T; rest; rest &= rest - 1) ++counts[lookup(L.c, T | (rest & (~rest + 1)))];
      auto best = counts.begin();
      for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
      if (best == counts.end()) return;
      L.exceptions[level] =
          std::max(L.exceptions[level], static_cast<std::size_t>(E.n - level) - best->second);
      if (!best->first.is_zero()) L.c.emplace(T, best->first);
    });
  }
  return L;
}

SparseRepresentation sparsify(const LayeredCoefficients& L) {
  CoefficientMap c = L.c;
  for (int e = 0; e < L.d; ++e) {
    CoefficientMap next;
    for (const auto& [S, v] : c)
      if (popcount(S) <= e) next.emplace(S, v);
    for (int size = e + 1; size <= L.d; ++size) {
      for_each_subset(L.n, size, [&](Mask S) {
        Rational v = lookup(c, S);
        for_each_subset_of(S, e, [&](Mask T) { v -= lookup(c, T); });
        if (!v.is_zero()) next.emplace(S, std::move(v));
      });
    }
    c = std::move(next);
  }
  SparseRepresentation out{L.n, L.k, L.d, {}, 0};
  for (const auto& [S, v] : c) {
    const int s = popcount(S);
    Rational C = Rational::from_u64(binomial(L.k - s, L.d - s)) * v;
    if (C.is_zero()) continue;
    out.support |= S;
    out.C.emplace(S, std::move(C));
  }
  return out;
}

Mask support_variables(const SparseRepresentation& S) {
  Mask out = 0;
  for (const auto& [T, c] : S.C)
    if (!c.is_zero()) out |= T;
  return out;
}

}  // namespace slicekit
