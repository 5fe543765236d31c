#include "slicekit/slice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "slicekit/error.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/recovery.hpp"

namespace slicekit {

std::uint64_t max_table_size() {
  if (const char* env = std::getenv("SLICEKIT_MAX_TABLE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxTable;
}

SliceDomain::SliceDomain(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxVariables)
    throw Error(ErrorKind::Input, "n must be in [1, " + std::to_string(kMaxVariables) + "]");
  if (k < 0) throw Error(ErrorKind::Input, "k must be non-negative");
  if (k > n) throw Error(ErrorKind::Input, "k > n");
}

void SliceDomain::check_guard() const {
  if (size() > max_table_size())
    throw Error(ErrorKind::Guard, "slice (" + std::to_string(n_) + " choose " + std::to_string(k_) +
                                      ") has " + std::to_string(size()) + " points, above the limit of " +
                                      std::to_string(max_table_size()));
}

std::vector<Mask> SliceDomain::points() const {
  check_guard();
  std::vector<Mask> out;
  out.reserve(size());
  for_each_subset(n_, k_, [&](Mask m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------

MultilinearPoly::MultilinearPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables) throw Error(ErrorKind::Input, "too many variables");
}

MultilinearPoly MultilinearPoly::constant(int n, const Rational& c) {
  MultilinearPoly p(n);
  p.add_term(0, c);
  return p;
}

MultilinearPoly MultilinearPoly::monomial(int n, Mask S, const Rational& c) {
  MultilinearPoly p(n);
  p.add_term(S, c);
  return p;
}

int MultilinearPoly::degree() const noexcept {
  int deg = 0;
  for (const auto& [S, _] : terms_) deg = std::max(deg, popcount(S));
  return deg;
}

Rational MultilinearPoly::coefficient(Mask S) const {
  auto it = terms_.find(S);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearPoly::add_term(Mask S, const Rational& c) {
  if ((S >> n_) != 0) throw Error(ErrorKind::Input, "monomial " + format_mask(S) + " exceeds n");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(S, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [S, c] : o.terms_) add_term(S, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [S, c] : o.terms_) add_term(S, -c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out(std::max(a.n_, b.n_));
  for (const auto& [S, c] : a.terms_)
    for (const auto& [T, e] : b.terms_) out.add_term(S | T, c * e);
  return out;
}

int RawPoly::max_index() const {
  int m = 0;
  for (const auto& t : terms)
    for (const auto& [i, _] : t.powers) m = std::max(m, i);
  return m;
}

MultilinearPoly multilinearize(const RawPoly& p, int n) {
  MultilinearPoly out(n);
  for (const auto& t : p.terms) {
    Mask S = 0;
    for (const auto& [i, power] : t.powers) {
      if (i < 1 || i > n)
        throw Error(ErrorKind::Input, "variable x" + std::to_string(i) + " outside 1.." + std::to_string(n));
      if (power < 1) throw Error(ErrorKind::Input, "exponents must be at least 1");
      S |= Mask{1} << (i - 1);
    }
    out.add_term(S, t.coefficient);
  }
  return out;
}

Rational evaluate_on_point(const MultilinearPoly& p, Mask x) {
  if ((x >> p.n()) != 0) throw Error(ErrorKind::Input, "point dimension exceeds polynomial's n");
  Rational acc;
  for (const auto& [S, c] : p.terms())
    if ((S & x) == S) acc += c;
  return acc;
}

// ---------------------------------------------------------------------------

SliceTable::SliceTable(SliceDomain domain, std::vector<Rational> values)
    : domain_(domain), values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw Error(ErrorKind::Input, "table length " + std::to_string(values_.size()) + " != C(n,k) = " +
                                      std::to_string(domain_.size()));
}

SliceTable truth_table(const MultilinearPoly& p, const SliceDomain& dom) {
  if (p.n() > dom.n()) throw Error(ErrorKind::Input, "polynomial has more variables than the domain");
  // Only monomials of size ≤ k can be non-zero on the slice.
  std::vector<std::pair<Mask, Rational>> live;
  for (const auto& [S, c] : p.terms())
    if (popcount(S) <= dom.k()) live.emplace_back(S, c);
  std::vector<Rational> values;
  values.reserve(dom.size());
  for (Mask x : dom.points()) {
    Rational acc;
    for (const auto& [S, c] : live)
      if ((S & x) == S) acc += c;
    values.push_back(std::move(acc));
  }
  return SliceTable(dom, std::move(values));
}

SliceTable tabulate(const SliceDomain& dom, const std::function<Rational(Mask)>& f) {
  std::vector<Rational> values;
  values.reserve(dom.size());
  for (Mask x : dom.points()) values.push_back(f(x));
  return SliceTable(dom, std::move(values));
}

MultilinearPoly homogenize(const MultilinearPoly& p, const SliceDomain& dom, int d) {
  if (dom.k() < d) throw Error(ErrorKind::Input, "slice too small to homogenize");
  if (p.degree() > d) throw Error(ErrorKind::Input, "degree exceeds target");
  if (dom.n() < d || p.n() > dom.n()) throw Error(ErrorKind::Input, "domain too small for target degree");
  const int n = dom.n(), k = dom.k();
  MultilinearPoly out(n);
  for (const auto& [S, c] : p.terms()) {
    const int s = popcount(S);
    const Rational share = c / Rational::from_u64(binomial(k - s, d - s));
    const Mask rest = prefix_mask(n) & ~S;
    for_each_subset_of(rest, d - s, [&](Mask extra) { out.add_term(S | extra, share); });
  }
  return out;
}

namespace {

// Dense elimination is used while the evaluation matrix stays this small.
constexpr std::uint64_t kEliminationEntries = 200'000;

}  // namespace

bool in_monomial_span_by_elimination(const SliceTable& f, int d) {
  const SliceDomain& dom = f.domain();
  if (d < 0 || d > dom.k()) throw Error(ErrorKind::Input, "elimination needs 0 <= d <= k");
  std::vector<Mask> monomials;
  for_each_subset(dom.n(), d, [&](Mask S) { monomials.push_back(S); });
  const auto points = dom.points();
  mpz_class scale = 1;
  for (const auto& v : f.values()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.raw().get_den_mpz_t());
  IntegerMatrix plain, augmented;
  plain.reserve(points.size());
  augmented.reserve(points.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    std::vector<mpz_class> row;
    row.reserve(monomials.size() + 1);
    for (Mask S : monomials) row.emplace_back((S & points[r]) == S ? 1 : 0);
    plain.push_back(row);
    const Rational& v = f.values()[r];
    row.push_back(v.raw().get_num() * (scale / v.raw().get_den()));
    augmented.push_back(std::move(row));
  }
  return bareiss_rank(std::move(plain)) == bareiss_rank(std::move(augmented));
}

std::size_t evaluation_matrix_rank(const SliceDomain& dom, int d) {
  std::vector<Mask> monomials;
  for_each_subset(dom.n(), d, [&](Mask S) { monomials.push_back(S); });
  IntegerMatrix m;
  for (Mask x : dom.points()) {
    std::vector<mpz_class> row;
    for (Mask S : monomials) row.emplace_back((S & x) == S ? 1 : 0);
    m.push_back(std::move(row));
  }
  return bareiss_rank(std::move(m));
}

bool has_degree_at_most(const SliceTable& f, int d) {
  const SliceDomain& dom = f.domain();
  if (d < 0) return false;
  // Every function on the slice has degree at most min(k, n − k).
  if (d >= std::min(dom.k(), dom.n() - dom.k())) return true;
  // Here d < k and d < n − k: degree ≤ d is membership in the span of the
  // degree-d monomials, which are independent on this slice.
  if (dom.size() * binomial(dom.n(), d) <= kEliminationEntries) return in_monomial_span_by_elimination(f, d);
  return try_extract_coefficients(f, d).has_value();
}

int slice_degree(const SliceTable& f) {
  int d = 0;
  while (!has_degree_at_most(f, d)) ++d;
  return d;
}

AValuedResult is_A_valued(const SliceTable& f, const ValueSet& A) {
  const auto points = f.domain().points();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!A.contains(f.values()[i])) return {false, points[i]};
  return {};
}

SliceTable dual(const SliceTable& f) {
  const SliceDomain& dom = f.domain();
  const SliceDomain target(dom.n(), dom.n() - dom.k());
  const Mask all = prefix_mask(dom.n());
  return tabulate(target, [&](Mask x) { return f.at(all & ~x); });
}

}  // namespace slicekit
