#include "slicekit/linalg.hpp"

#include <utility>

namespace slicekit {

std::size_t bareiss_rank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class factor = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = p * m[r][c] - factor * m[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m[r][c] = std::move(v);
      }
      m[r][col] = 0;
    }
    // Rows above the pivot row are untouched; columns skipped without a pivot
    // keep the previous divisor, which still divides exactly (Sylvester identity).
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
  IntegerMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class scale = 1;
    for (const auto& v : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.raw().get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.raw().get_num() * (scale / v.raw().get_den()));
    m.push_back(std::move(out));
  }
  return bareiss_rank(std::move(m));
}

}  // namespace slicekit
