#include "slicekit/rational.hpp"

#include <cctype>
#include <ostream>

#include "slicekit/error.hpp"

namespace slicekit {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Input, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_integer(const mpz_class& value) { return Rational(mpq_class(value)); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* what) -> Rational {
    throw ParseError(std::string(what) + " in rational '" + std::string(text) + "'", 1,
                     static_cast<int>(pos) + 1);
  };
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  std::string num = digits();
  if (num.empty()) return fail("expected digits");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
    if (den.empty()) return fail("expected denominator digits");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) return fail("unexpected character");
  mpz_class d(den);
  if (d == 0) return fail("zero denominator");
  mpz_class n(num);
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Input, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace slicekit
