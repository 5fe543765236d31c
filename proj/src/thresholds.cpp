#include "slicekit/thresholds.hpp"

#include <algorithm>
#include <sstream>

#include "slicekit/error.hpp"

namespace slicekit {
namespace {

void require_degree(int d) {
  if (d < 1) throw Error(ErrorKind::Input, "degree must be at least 1");
}

// Enumerates A^(d+1) lexicographically. For each non-constant tuple, extends the
// sequence P(0..d) by finite differences while it stays in A, up to `limit`.
// The visitor receives the tuple and the last x with P(0..x) ⊆ A; returning
// true stops the enumeration.
template <typename Visitor>
void for_each_tuple_reach(const ValueSet& A, int d, long limit, Visitor&& visit) {
  const auto elems = A.elements();
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  std::vector<std::size_t> idx(width, 0);
  std::vector<Rational> values(width);
  std::vector<Rational> edge(width);
  while (true) {
    for (std::size_t i = 0; i < width; ++i) values[i] = elems[idx[i]];
    const bool constant =
        std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values[0]; });
    if (!constant) {
      // edge[j] = Δ^j P(d - j); edge[d] is the constant top difference.
      std::vector<Rational> row = values;
      for (std::size_t j = 0; j < width; ++j) {
        edge[j] = row.back();
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
      }
      long reach = d;
      while (reach < limit) {
        for (std::size_t j = width - 1; j-- > 0;) edge[j] += edge[j + 1];
        if (!A.contains(edge[0])) break;
        ++reach;
      }
      if (visit(values, reach)) return;
    }
    std::size_t pos = width;
    while (pos > 0 && ++idx[pos - 1] == elems.size()) idx[--pos] = 0;
    if (pos == 0) return;
  }
}

UnivariatePoly poly_through(const std::vector<Rational>& values) {
  std::vector<IntegerPoint> pts;
  for (std::size_t i = 0; i < values.size(); ++i) pts.emplace_back(static_cast<long>(i), values[i]);
  return interpolate(pts);
}

}  // namespace

std::optional<UnivariatePoly> find_nonconstant_witness(const ValueSet& A, int d, long L) {
  require_degree(d);
  if (L < d) throw Error(ErrorKind::Input, "witness search needs L >= d");
  std::optional<UnivariatePoly> found;
  for_each_tuple_reach(A, d, L, [&](const std::vector<Rational>& values, long reach) {
    if (reach < L) return false;
    found = poly_through(values);
    return true;
  });
  return found;
}

long compute_W(const ValueSet& A, int d) {
  require_degree(d);
  const long bound = static_cast<long>(A.size()) * d;
  long best = d;
  // A reach of `bound` would mean W > |A|d, so cap the extension one past it.
  for_each_tuple_reach(A, d, bound, [&](const std::vector<Rational>&, long reach) {
    best = std::max(best, reach);
    return false;
  });
  const long W = best + 1;
  if (W <= d || W > bound) {
    std::ostringstream os;
    os << "W(" << A.str() << "," << d << ") = " << W << " violates d < W <= |A|d";
    throw Error(ErrorKind::Internal, os.str());
  }
  return W;
}

long WCache::operator()(int s) {
  auto it = values_.find(s);
  if (it != values_.end()) return it->second;
  const long w = compute_W(A_, s);
  values_.emplace(s, w);
  return w;
}

KValue compute_k(WCache& W, int d) {
  require_degree(d);
  KValue out;
  out.value = -1;
  for (int s = 1; s <= d; ++s) {
    const long candidate = d + static_cast<long>(d / s) * (W(s) - s);
    if (candidate > out.value) {
      out.value = candidate;
      out.attaining_s = {s};
    } else if (candidate == out.value) {
      out.attaining_s.insert(s);
    }
  }
  return out;
}

KValue compute_k(const ValueSet& A, int d) {
  WCache cache(A);
  return compute_k(cache, d);
}

long compute_kappa(WCache& W, int d) {
  require_degree(d);
  long kappa = d + 1;
  for (int e = 0; e <= d - 1; ++e) kappa = std::max(kappa, e + W(d - e));
  for (int s = 1; s <= d; ++s)
    for (int r = 1; r <= d / s; ++r) kappa = std::max(kappa, static_cast<long>(d - r * s) + r * W(s));
  return kappa;
}

long compute_kappa(const ValueSet& A, int d) {
  WCache cache(A);
  return compute_kappa(cache, d);
}

long longest_ap(const ValueSet& A) {
  const auto elems = A.elements();
  long best = 2;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Rational step = elems[j] - elems[i];
      long length = 2;
      Rational next = elems[j] + step;
      while (A.contains(next)) {
        ++length;
        next += step;
      }
      best = std::max(best, length);
    }
  }
  return best;
}

std::vector<ThresholdRow> build_table(const std::vector<ValueSet>& sets, int d_max) {
  if (d_max < 1) throw Error(ErrorKind::Input, "d_max must be at least 1");
  std::vector<ThresholdRow> rows;
  for (const auto& A : sets) {
    WCache W(A);
    for (int d = 1; d <= d_max; ++d) {
      const KValue k = compute_k(W, d);
      const long kappa = compute_kappa(W, d);
      if (kappa != k.value) {
        std::ostringstream os;
        os << "kappa(" << A.str() << "," << d << ") = " << kappa << " but k = " << k.value;
        throw Error(ErrorKind::Internal, os.str());
      }
      rows.push_back(ThresholdRow{A, d, W(d), k.value, kappa, k.attaining_s});
    }
  }
  return rows;
}

}  // namespace slicekit
