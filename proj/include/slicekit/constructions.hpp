#pragma once

#include <map>
#include <optional>
#include <string>

#include "slicekit/slice.hpp"
#include "slicekit/univariate.hpp"
#include "slicekit/value_set.hpp"

namespace slicekit {

enum class Family { BlockSum, Gate, BlockGate };

std::string family_name(Family f);

/// Parameters of one generated non-junta function.
struct CounterexampleSpec {
  Family family = Family::BlockSum;
  ValueSet A;
  int d = 0;
  int k = 0;
  int m = 0;       // requested: the function is not an (m−1)-junta
  int blocks = 0;  // number of blocks actually used (≥ m, and ≥ k − gate size for gates)
  Rational a{};
  Rational b{};  // only meaningful for BlockSum
  int e = 0;       // Gate: size of the gate monomial
  int t = 0;       // BlockGate: gate size
  int r = 1;       // BlockGate: block width
  int s = 0;       // degree bound of the witness polynomial
  std::optional<UnivariatePoly> witness_poly{};
  int n = 0;
  Mask I = 0;  // disjoint sets whose cross pairs are all sensitive
  Mask J = 0;
};

struct Counterexample {
  CounterexampleSpec spec;
  MultilinearPoly poly;
};

/// a + (b − a)·Σ_{i=1}^m x_{{(i−1)k+1, ..., ik}} on n = 2km variables.
MultilinearPoly construct_block_sum(const Rational& a, const Rational& b, int k, int m);

/// a(1 − x_{1..e}) + x_{1..e}·P(Σ_{i=1}^m x_{e+i}) on n = e + 2m variables.
MultilinearPoly construct_gate(const ValueSet& A, const Rational& a, int e, const UnivariatePoly& P, int m,
                               int k);

/// a(1 − x_{1..t}) + x_{1..t}·P(Σ_{i=1}^m x_{B_i}) with disjoint blocks
/// B_i = {t+(i−1)r+1, ..., t+ir}, on n = t + 2rm variables.
MultilinearPoly construct_block_gate(const ValueSet& A, const Rational& a, int t, int r, const UnivariatePoly& P,
                                     int m, int k);

/// Picks the first violated threshold condition (k ≤ d, then gate sizes
/// e = 0..d−1, then (t, r, s) lexicographically) and builds the matching
/// A-valued degree-≤d function that is not an (m−1)-junta.
/// Throws Error(Domain, "no counterexample exists at this k") when k ≥ k(A,d).
Counterexample best_counterexample(const ValueSet& A, int d, int k, int m);

/// f_a(x) = Π_{b ≠ a} (f(x) − b)/(a − b) for each a ∈ A.
/// Throws Error(Domain) with the offending point when f is not A-valued.
std::map<Rational, SliceTable> indicator_decomposition(const SliceTable& f, const ValueSet& A);

}  // namespace slicekit
