#include "slicekit/value_set.hpp"

#include <algorithm>
#include <cctype>

#include "slicekit/error.hpp"

namespace slicekit {

ValueSet::ValueSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw Error(ErrorKind::Input, "value set has duplicate elements");
  if (elements_.size() < 2) throw Error(ErrorKind::Input, "value set needs at least two elements");
}

ValueSet ValueSet::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " in value set '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
  ++pos;
  std::vector<Rational> items;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') fail("empty value set");
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != '}') ++pos;
    if (pos >= text.size()) fail("expected '}'");
    try {
      items.push_back(Rational::parse(text.substr(start, pos - start)));
    } catch (const ParseError& e) {
      pos = start + static_cast<std::size_t>(e.column()) - 1;
      fail("bad rational");
    }
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  std::vector<Rational> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("duplicate element");
  if (sorted.size() < 2) fail("value set needs at least two elements");
  return ValueSet(std::move(items));
}

bool ValueSet::contains(const Rational& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

long ValueSet::index_of(const Rational& value) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  if (it == elements_.end() || *it != value) return -1;
  return static_cast<long>(it - elements_.begin());
}

std::string ValueSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += elements_[i].str();
  }
  return out + "}";
}

}  // namespace slicekit
