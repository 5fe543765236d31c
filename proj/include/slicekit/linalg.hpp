#pragma once

#include <gmpxx.h>

#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Rank by Bareiss fraction-free elimination. Consumes its argument.
std::size_t bareiss_rank(IntegerMatrix m);

/// Rank of a rational matrix; each row is scaled to integers before elimination.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace slicekit
