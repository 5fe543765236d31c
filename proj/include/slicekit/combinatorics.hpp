#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace slicekit {

/// Subset of [n] as a bitmask; coordinate i (1-based) is bit i-1.
using Mask = std::uint64_t;

inline constexpr int kMaxVariables = 62;

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// C(n, r), zero outside 0 ≤ r ≤ n. Exact for n ≤ 64.
std::uint64_t binomial(long n, long r) noexcept;

/// Next mask with the same popcount in increasing numeric (= colex) order.
inline Mask next_same_popcount(Mask m) noexcept {
  const Mask lowest = m & (~m + 1);
  const Mask ripple = m + lowest;
  return ripple | (((m ^ ripple) >> 2) / lowest);
}

/// Mask with coordinates 1..count set.
inline Mask prefix_mask(int count) noexcept {
  return count >= 64 ? ~Mask{0} : ((Mask{1} << count) - 1);
}

/// Mask with coordinates first..last set (1-based, inclusive); empty if last < first.
inline Mask range_mask(int first, int last) noexcept {
  if (last < first) return 0;
  return prefix_mask(last) & ~prefix_mask(first - 1);
}

/// Calls fn(mask) for each size-r subset of [n] in colexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = Mask{1} << n;
  for (Mask m = prefix_mask(r); m < limit; m = next_same_popcount(m)) {
    fn(m);
    if (m == (prefix_mask(n) ^ prefix_mask(n - r))) break;  // top subset; avoid overflow at n = 64
  }
}

/// Calls fn(sub) for each size-r subset of `set`, in colex order of the
/// positions within `set`.
template <typename Fn>
void for_each_subset_of(Mask set, int r, Fn&& fn) {
  std::vector<int> bits;
  for (Mask m = set; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  const int size = static_cast<int>(bits.size());
  for_each_subset(size, r, [&](Mask local) {
    Mask out = 0;
    for (Mask l = local; l; l &= l - 1) out |= Mask{1} << bits[std::countr_zero(l)];
    fn(out);
  });
}

/// Rank of a size-k mask in colex order among all size-k subsets.
std::uint64_t colex_rank(Mask m) noexcept;

/// 1-based coordinate indices of a mask in increasing order.
std::vector<int> mask_indices(Mask m);

Mask indices_mask(const std::vector<int>& indices);

/// "{1,3,4}" (1-based); "{}" for the empty set.
std::string format_mask(Mask m);

}  // namespace slicekit
