#pragma once

#include <vector>

#include "slicekit/slice.hpp"

namespace slicekit {

/// Edge {i, j} (1-based, i < j) with a point x such that f(x) ≠ f(x^(i j)).
struct SensitivityEdge {
  int i = 0;
  int j = 0;
  Mask witness = 0;

  friend bool operator==(const SensitivityEdge&, const SensitivityEdge&) = default;
};

struct SensitivityGraph {
  int n = 0;
  std::vector<SensitivityEdge> edges;  // sorted by (i, j)
  std::vector<Mask> adjacency;         // adjacency[i - 1] = neighbours of coordinate i

  bool has_edge(int i, int j) const;
};

/// Exhaustive scan of every point and every transposition of a 1 with a 0.
SensitivityGraph sensitivity_graph(const SliceTable& f);

/// f is a J-junta iff every sensitivity edge touches J.
bool is_junta_on(const SliceTable& f, Mask J);
bool is_junta_on(const SensitivityGraph& g, Mask J);

struct JuntaReport {
  int min_size = 0;
  Mask witness = 0;
  /// One witnessing point per sensitivity edge; these are the pairs any junta set must hit.
  std::vector<SensitivityEdge> certificate_pairs;
};

/// Exact minimum vertex cover by branch and bound; branches on the
/// lowest-index vertex with a live edge, pruned by a greedy matching bound.
Mask minimum_vertex_cover(const SensitivityGraph& g);

JuntaReport minimum_junta(const SliceTable& f);

/// min(|I|, |J|) if every (i, j) ∈ I × J is a sensitivity edge, else 0.
/// Throws Error if I and J intersect.
long junta_lower_bound(const SliceTable& f, Mask I, Mask J);
long junta_lower_bound(const SensitivityGraph& g, Mask I, Mask J);

}  // namespace slicekit
