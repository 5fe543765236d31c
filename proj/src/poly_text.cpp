#include "slicekit/poly_text.hpp"

#include <cctype>

#include "slicekit/error.hpp"

namespace slicekit {
namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  RawPoly parse() {
    RawPoly out;
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    while (true) {
      RawTerm term = parse_term();
      if (negate) term.coefficient = -term.coefficient;
      out.terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = peek() == '-';
      advance();
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm term{Rational(1), {}};
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        const auto indices = parse_mono();
        int power = 1;
        skip_ws();
        if (peek() == '^') {
          advance();
          skip_ws();
          power = static_cast<int>(parse_uint("exponent"));
          if (power < 1) fail("exponent must be at least 1");
        }
        for (int i : indices) term.powers[i] += power;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        term.coefficient *= parse_rational();
      } else {
        fail("expected a number or a monomial x{...}");
      }
      skip_ws();
      if (peek() != '*') break;
      advance();
    }
    return term;
  }

  std::vector<int> parse_mono() {
    advance();  // 'x'
    if (peek() != '{') fail("expected '{' after x");
    advance();
    std::vector<int> indices;
    while (true) {
      skip_ws();
      const long i = parse_uint("index");
      if (i < 1 || i > kMaxVariables) fail("index out of range");
      indices.push_back(static_cast<int>(i));
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        break;
      }
      fail("expected ',' or '}'");
    }
    return indices;
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    skip_ws();
    if (peek() == '/') {
      advance();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    std::string literal;
    for (char c : text_.substr(start, pos_ - start))
      if (!std::isspace(static_cast<unsigned char>(c))) literal += c;
    try {
      return Rational::parse(literal);
    } catch (const ParseError&) {
      fail("bad rational '" + literal + "'");
    }
  }

  long parse_uint(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail(std::string(what) + " too large");
      advance();
    }
    return v;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

RawPoly parse_raw_poly(std::string_view text) { return PolyParser(text).parse(); }

MultilinearPoly parse_poly(std::string_view text, int n) {
  const RawPoly raw = parse_raw_poly(text);
  const int used = raw.max_index();
  if (n == 0) n = std::max(used, 1);
  if (used > n)
    throw Error(ErrorKind::Input, "polynomial uses x{" + std::to_string(used) + "} but n = " + std::to_string(n));
  return multilinearize(raw, n);
}

std::string format_poly(const MultilinearPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [S, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (S == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.str() + "*";
    out += "x" + format_mask(S);
  }
  return out;
}

}  // namespace slicekit
