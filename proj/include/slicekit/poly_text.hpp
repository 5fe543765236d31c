#pragma once

#include <string>
#include <string_view>

#include "slicekit/slice.hpp"

namespace slicekit {

/// Parses the polynomial grammar
///
///   poly   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := rational | mono ["^" int]
///   mono   := "x{" int ("," int)* "}"
///
/// e.g. `3 - 2*x{1} + 1/2*x{1,2}`. Whitespace (including newlines) is ignored;
/// indices are 1-based. Throws ParseError with line and column.
RawPoly parse_raw_poly(std::string_view text);

/// Parses and multilinearizes over x_1..x_n; n = 0 means "largest index used".
MultilinearPoly parse_poly(std::string_view text, int n = 0);

/// Canonical text form: terms by degree then colex, e.g. `3 - 2*x{1} + 1/2*x{1,2}`.
std::string format_poly(const MultilinearPoly& p);

}  // namespace slicekit
