#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "slicekit/slice.hpp"

namespace slicekit {

using CoefficientMap = std::map<Mask, Rational, MonomialOrder>;

/// f = Σ_{|S| = d} c(S) x_S on ([n] choose k). Keys all have size d; zeros omitted.
struct HomogeneousExpansion {
  int n = 0, k = 0, d = 0;
  CoefficientMap coeffs;

  MultilinearPoly as_poly() const;
};

/// Coefficients c(T) for all |T| ≤ d: the top level is the homogeneous
/// expansion, lower levels come from bunching. Missing keys are zero.
struct LayeredCoefficients {
  int n = 0, k = 0, d = 0;
  CoefficientMap c;
  /// exceptions[level] = max over |T| = level of #{i ∉ T : c(T ∪ {i}) ≠ c(T)}.
  std::vector<std::size_t> exceptions;

  Rational at(Mask T) const;
};

/// f = Σ_{|S| ≤ d} C(S) x_S with (ideally) small variable support.
struct SparseRepresentation {
  int n = 0, k = 0, d = 0;
  CoefficientMap C;
  Mask support = 0;

  MultilinearPoly as_poly() const;
};

using TransferMatrix = std::vector<std::vector<std::uint64_t>>;

/// Lower-triangular (d+1)×(d+1) matrix with h(e) = Σ_{e'} M[e][e'] γ(e').
/// M[e][e'] = C(d−e', e−e')·C(k−d+e', (k−e)−(d−e')) for e' ≤ e. Requires k ≥ d ≥ 0.
TransferMatrix transfer_matrix(int k, int d);

using PointOracle = std::function<Rational(Mask)>;

/// Recovers the degree-d homogeneous expansion of f from point values.
///
/// For each size-d set S, takes I = the k lowest indices outside S, forms
/// h(e) = Σ_{S' ⊆ S, |S'| = e} Σ_{I' ⊆ I, |I'| = k − e} f(S' ∪ I') and solves
/// the triangular transfer system; c(S) is the top component. The result is
/// checked against every point of the domain, so a function of degree > d is
/// rejected with Error("input exceeds stated degree").
HomogeneousExpansion extract_coefficients(const PointOracle& f, const SliceDomain& dom, int d);
HomogeneousExpansion extract_coefficients(const SliceTable& f, int d);

/// As extract_coefficients on a table, but returns nullopt when f has degree > d.
std::optional<HomogeneousExpansion> try_extract_coefficients(const SliceTable& f, int d);

/// Assigns each |T| < d the plurality value of c(T ∪ {i}) over i ∉ T, level by
/// level from d − 1 down to 0. Ties go to the smallest value.
LayeredCoefficients bunching_assign(const HomogeneousExpansion& E);

/// Level-by-level transform c_{e+1}(S) = c_e(S) − Σ_{T ⊆ S, |T| = e} c_e(T) for
/// |S| > e, then C(S) = C(k − |S|, d − |S|)·c_d(S).
SparseRepresentation sparsify(const LayeredCoefficients& L);

Mask support_variables(const SparseRepresentation& S);

}  // namespace slicekit
