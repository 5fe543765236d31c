#include "slicekit/combinatorics.hpp"

#include "slicekit/error.hpp"

namespace slicekit {

std::uint64_t binomial(long n, long r) noexcept {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (long i = 1; i <= r; ++i) acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(Mask m) noexcept {
  std::uint64_t rank = 0;
  long i = 1;
  for (; m; m &= m - 1, ++i) rank += binomial(std::countr_zero(m), i);
  return rank;
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Mask indices_mask(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > 64) throw Error(ErrorKind::Input, "coordinate index out of range: " + std::to_string(i));
    m |= Mask{1} << (i - 1);
  }
  return m;
}

std::string format_mask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace slicekit
