#include "slicekit/junta.hpp"

#include <algorithm>

#include "slicekit/error.hpp"

namespace slicekit {

bool SensitivityGraph::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n || j > n) return false;
  return (adjacency[i - 1] >> (j - 1)) & 1;
}

SensitivityGraph sensitivity_graph(const SliceTable& f) {
  const SliceDomain& dom = f.domain();
  const int n = dom.n();
  SensitivityGraph g{n, {}, std::vector<Mask>(n, 0)};
  std::vector<std::vector<Mask>> witness(n, std::vector<Mask>(n, 0));
  const Mask all = prefix_mask(n);
  for (Mask x : dom.points()) {
    const Rational& fx = f.at(x);
    for (Mask ones = x; ones; ones &= ones - 1) {
      const int i = std::countr_zero(ones);
      for (Mask zeros = all & ~x; zeros; zeros &= zeros - 1) {
        const int j = std::countr_zero(zeros);
        if ((g.adjacency[i] >> j) & 1) continue;
        const Mask swapped = x ^ (Mask{1} << i) ^ (Mask{1} << j);
        if (f.at(swapped) == fx) continue;
        g.adjacency[i] |= Mask{1} << j;
        g.adjacency[j] |= Mask{1} << i;
        witness[std::min(i, j)][std::max(i, j)] = x;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((g.adjacency[i] >> j) & 1) g.edges.push_back({i + 1, j + 1, witness[i][j]});
  return g;
}

bool is_junta_on(const SensitivityGraph& g, Mask J) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const SensitivityEdge& e) {
    return ((J >> (e.i - 1)) & 1) || ((J >> (e.j - 1)) & 1);
  });
}

bool is_junta_on(const SliceTable& f, Mask J) { return is_junta_on(sensitivity_graph(f), J); }

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const SensitivityGraph& g) : adj_(g.adjacency) {
    best_ = 0;
    for (const auto& e : g.edges) best_ |= Mask{1} << (e.i - 1) | Mask{1} << (e.j - 1);
    best_size_ = popcount(best_);
  }

  Mask run(Mask alive) {
    search(alive, 0);
    return best_;
  }

 private:
  int matching_bound(Mask alive) const {
    int size = 0;
    for (Mask free = alive; free; free &= free - 1) {
      const int v = std::countr_zero(free);
      const Mask partners = adj_[v] & free & ~(Mask{1} << v);
      if (!partners) continue;
      free &= ~(partners & (~partners + 1));
      ++size;
    }
    return size;
  }

  void search(Mask alive, Mask cover) {
    int v = -1;
    for (Mask m = alive; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      if (adj_[c] & alive) {
        v = c;
        break;
      }
    }
    const int size = popcount(cover);
    if (v < 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = cover;
      }
      return;
    }
    if (size + matching_bound(alive) >= best_size_) return;
    const Mask bit = Mask{1} << v;
    search(alive & ~bit, cover | bit);
    const Mask neighbours = adj_[v] & alive;
    search(alive & ~bit & ~neighbours, cover | neighbours);
  }

  const std::vector<Mask>& adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

Mask minimum_vertex_cover(const SensitivityGraph& g) {
  CoverSearch search(g);
  return search.run(prefix_mask(g.n));
}

JuntaReport minimum_junta(const SliceTable& f) {
  const SensitivityGraph g = sensitivity_graph(f);
  const Mask cover = minimum_vertex_cover(g);
  return JuntaReport{popcount(cover), cover, g.edges};
}

long junta_lower_bound(const SensitivityGraph& g, Mask I, Mask J) {
  if (I & J) throw Error(ErrorKind::Input, "I and J must be disjoint");
  for (Mask a = I; a; a &= a - 1)
    for (Mask b = J; b; b &= b - 1)
      if (!g.has_edge(std::countr_zero(a) + 1, std::countr_zero(b) + 1)) return 0;
  return std::min(popcount(I), popcount(J));
}

long junta_lower_bound(const SliceTable& f, Mask I, Mask J) {
  if (I & J) throw Error(ErrorKind::Input, "I and J must be disjoint");
  return junta_lower_bound(sensitivity_graph(f), I, J);
}

}  // namespace slicekit
