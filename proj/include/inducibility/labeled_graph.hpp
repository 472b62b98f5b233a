#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace inducibility {

using AdjacencyMatrix =
    Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite simple graph on vertices 0..n-1 whose diagonal records loops.
///
/// A loop at v means that two copies of v in a blow-up, or two sample
/// positions landing on v, are adjacent.
class LabeledGraph {
 public:
  /// Anticlique on n vertices.
  explicit LabeledGraph(int n);

  /// Takes a square 0/1 matrix; throws if it is not symmetric.
  explicit LabeledGraph(AdjacencyMatrix adjacency);

  static LabeledGraph from_edges(
      int n, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.rows()); }
  bool adjacent(int u, int v) const { return adj_(u, v) != 0; }
  bool has_loop(int v) const { return adj_(v, v) != 0; }
  bool has_loops() const;

  /// Toggles the edge (or loop, when u == v) keeping symmetry.
  void set_edge(int u, int v, bool present);

  int edge_count() const;  // loops excluded
  int degree(int v) const;  // loop excluded
  std::vector<int> degrees() const;

  const AdjacencyMatrix& adjacency() const { return adj_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.order() == b.order() && (a.adj_ == b.adj_).all();
  }

 private:
  AdjacencyMatrix adj_;
};

/// Isomorphism invariant of a small graph: lexicographically minimal
/// adjacency bit-string over all relabelings.
///
/// `bits` reads, most significant bit first, vertex by vertex: for vertex k
/// its loop bit followed by the pairs (0,k),(1,k),...,(k-1,k). Vertex-major
/// order lets the permutation search prune on prefixes.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;
  std::uint64_t aut_count = 0;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

inline constexpr int kMaxCanonicalOrder = 10;

LabeledGraph complement(const LabeledGraph& g);
LabeledGraph blow_up(const LabeledGraph& g, int m);
LabeledGraph compose(const LabeledGraph& g, const LabeledGraph& h);
LabeledGraph tensor(const LabeledGraph& g, const LabeledGraph& h);
LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h);
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> vertices);

CanonicalCode canonical_form(const LabeledGraph& g);
bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);
bool is_twin_free(const LabeledGraph& g);

/// Catalogue of named constructions, e.g. ("K", {4}), ("paley", {17}),
/// ("cayley2", {10, 1, 2, 5, 6, 9, 10}) or fixed names such as "Q4", "bull".
LabeledGraph build_named(std::string_view name, std::span<const int> params = {});

/// True when `name` (without parameters) is a fixed catalogue entry, e.g. "P4".
bool is_fixed_name(std::string_view name);

std::string graph6_encode(const LabeledGraph& g);
LabeledGraph graph6_decode(std::string_view text);

}  // namespace inducibility
