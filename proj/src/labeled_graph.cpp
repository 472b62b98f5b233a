#include "inducibility/labeled_graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace inducibility {

LabeledGraph::LabeledGraph(int n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_ = AdjacencyMatrix::Zero(n, n);
}

LabeledGraph::LabeledGraph(AdjacencyMatrix adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() < 1 || adj_.rows() != adj_.cols()) {
    throw std::invalid_argument("adjacency matrix must be square and non-empty");
  }
  if ((adj_ != adj_.transpose()).any()) {
    throw std::invalid_argument("adjacency matrix must be symmetric");
  }
  if ((adj_ > 1).any()) throw std::invalid_argument("adjacency entries must be 0 or 1");
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    g.set_edge(u, v, true);
  }
  return g;
}

bool LabeledGraph::has_loops() const { return (adj_.matrix().diagonal().array() != 0).any(); }

void LabeledGraph::set_edge(int u, int v, bool present) {
  adj_(u, v) = adj_(v, u) = present ? 1 : 0;
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (int u = 0; u < order(); ++u) twice += degree(u);
  return twice / 2;
}

int LabeledGraph::degree(int v) const {
  return static_cast<int>(adj_.col(v).cast<int>().sum()) - (has_loop(v) ? 1 : 0);
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

LabeledGraph complement(const LabeledGraph& g) {
  return LabeledGraph(AdjacencyMatrix(1 - g.adjacency()));
}

LabeledGraph blow_up(const LabeledGraph& g, int m) {
  if (m < 1) throw std::invalid_argument("blow-up order must be positive");
  const int n = g.order();
  AdjacencyMatrix a(n * m, n * m);
  for (int u = 0; u < n * m; ++u) {
    for (int v = 0; v < n * m; ++v) {
      a(u, v) = (u == v) ? 0 : g.adjacency()(u / m, v / m);
    }
  }
  return LabeledGraph(std::move(a));
}

LabeledGraph compose(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.has_loops() || h.has_loops()) {
    throw std::invalid_argument("compose is defined for loopless graphs only");
  }
  const int ng = g.order();
  const int nh = h.order();
  AdjacencyMatrix a(ng * nh, ng * nh);
  for (int u = 0; u < ng * nh; ++u) {
    for (int v = 0; v < ng * nh; ++v) {
      const int gu = u / nh, gv = v / nh;
      a(u, v) = gu == gv ? h.adjacency()(u % nh, v % nh) : g.adjacency()(gu, gv);
    }
  }
  return LabeledGraph(std::move(a));
}

LabeledGraph tensor(const LabeledGraph& g, const LabeledGraph& h) {
  const int ng = g.order();
  const int nh = h.order();
  AdjacencyMatrix a(ng * nh, ng * nh);
  for (int u = 0; u < ng * nh; ++u) {
    for (int v = 0; v < ng * nh; ++v) {
      a(u, v) = g.adjacency()(u / nh, v / nh) ^ h.adjacency()(u % nh, v % nh);
    }
  }
  return LabeledGraph(std::move(a));
}

LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h) {
  const int ng = g.order();
  AdjacencyMatrix a = AdjacencyMatrix::Zero(ng + h.order(), ng + h.order());
  a.topLeftCorner(ng, ng) = g.adjacency();
  a.bottomRightCorner(h.order(), h.order()) = h.adjacency();
  return LabeledGraph(std::move(a));
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  AdjacencyMatrix a(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = g.adjacency()(vertices[i], vertices[j]);
  }
  return LabeledGraph(std::move(a));
}

namespace {

// Depth-first search over relabelings, building the vertex-major code one
// vertex at a time and pruning prefixes already larger than the best code.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabeledGraph& g)
      : g_(g), n_(g.order()), total_bits_(n_ + n_ * (n_ - 1) / 2), used_(n_, false),
        image_(n_, -1) {}

  CanonicalCode run() {
    search(0, 0, 0);
    return CanonicalCode{n_, best_, count_};
  }

 private:
  void search(int k, std::uint64_t prefix, int prefix_bits) {
    if (k == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        count_ = 1;
        found_ = true;
      } else if (prefix == best_) {
        ++count_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t code = (prefix << 1) | (g_.has_loop(v) ? 1u : 0u);
      for (int i = 0; i < k; ++i) code = (code << 1) | (g_.adjacent(image_[i], v) ? 1u : 0u);
      const int bits = prefix_bits + 1 + k;
      if (found_) {
        const std::uint64_t best_prefix = best_ >> (total_bits_ - bits);
        if (code > best_prefix) continue;
      }
      used_[v] = true;
      image_[k] = v;
      search(k + 1, code, bits);
      used_[v] = false;
    }
  }

  const LabeledGraph& g_;
  int n_;
  int total_bits_;
  std::vector<bool> used_;
  std::vector<int> image_;
  std::uint64_t best_ = 0;
  std::uint64_t count_ = 0;
  bool found_ = false;
};

}  // namespace

CanonicalCode canonical_form(const LabeledGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                                std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_twin_free(const LabeledGraph& g) {
  if (g.has_loops()) throw std::invalid_argument("twin-freeness is defined for loopless graphs");
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool twins = true;
      for (int z = 0; z < n && twins; ++z) {
        if (z == x || z == y) continue;
        twins = g.adjacent(x, z) == g.adjacent(y, z);
      }
      if (twins) return false;
    }
  }
  return true;
}

}  // namespace inducibility
