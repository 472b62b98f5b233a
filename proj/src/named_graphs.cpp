#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inducibility/labeled_graph.hpp"

namespace inducibility {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// 4-vertex graphs of the Exoo table, plus the bull.
const std::map<std::string, std::pair<int, EdgeList>, std::less<>>& fixed_graphs() {
  static const std::map<std::string, std::pair<int, EdgeList>, std::less<>> table = {
      {"T4", {4, {{1, 2}, {2, 3}, {3, 1}}}},
      {"S4", {4, {{0, 1}, {0, 2}, {0, 3}}}},
      {"M4", {4, {{1, 2}, {3, 0}}}},
      {"V4", {4, {{3, 1}, {3, 2}}}},
      {"Q4", {4, {{1, 2}, {2, 0}, {0, 1}, {3, 0}}}},
      {"D4", {4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}}}},
      {"E4", {4, {{1, 2}}}},
      {"bull", {5, {{3, 1}, {3, 2}, {1, 2}, {1, 0}, {3, 4}}}},
  };
  return table;
}

void require(bool ok, std::string_view name, const std::string& why) {
  if (!ok) throw std::invalid_argument(std::string(name) + ": " + why);
}

void require_count(std::string_view name, std::span<const int> params, std::size_t count) {
  require(params.size() == count, name,
          "expects " + std::to_string(count) + " parameter(s), got " +
              std::to_string(params.size()));
}

LabeledGraph clique(int n, bool loops) {
  LabeledGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + (loops ? 0 : 1); v < n; ++v) g.set_edge(u, v, true);
  }
  return g;
}

LabeledGraph cycle(int n) {
  LabeledGraph g(n);
  for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n, true);
  return g;
}

LabeledGraph path(int n) {
  LabeledGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
  return g;
}

LabeledGraph complete_multipartite(std::span<const int> sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    require(sizes[p] >= 1, "Kpart", "part sizes must be positive");
    part.insert(part.end(), sizes[p], static_cast<int>(p));
  }
  LabeledGraph g(static_cast<int>(part.size()));
  for (std::size_t u = 0; u < part.size(); ++u) {
    for (std::size_t v = u + 1; v < part.size(); ++v) {
      if (part[u] != part[v]) g.set_edge(static_cast<int>(u), static_cast<int>(v), true);
    }
  }
  return g;
}

// Finite field of order q in {5, 13, 17, 29} (prime) or 9 = F3[i]/(i^2 + 1).
// Elements of F9 are encoded as a + 3b for a + b*i.
int field_multiply(int q, int x, int y) {
  if (q != 9) return (x * y) % q;
  const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
  const int real = ((a * c - b * d) % 3 + 3) % 3;
  const int imag = (a * d + b * c) % 3;
  return real + 3 * imag;
}

int field_subtract(int q, int x, int y) {
  if (q != 9) return ((x - y) % q + q) % q;
  const int real = ((x % 3 - y % 3) % 3 + 3) % 3;
  const int imag = ((x / 3 - y / 3) % 3 + 3) % 3;
  return real + 3 * imag;
}

LabeledGraph paley(int q) {
  static constexpr std::array<int, 5> kSupported = {5, 9, 13, 17, 29};
  require(std::find(kSupported.begin(), kSupported.end(), q) != kSupported.end(), "paley",
          "order " + std::to_string(q) + " unsupported (choose 5, 9, 13, 17 or 29)");
  std::vector<bool> square(q, false);
  for (int x = 1; x < q; ++x) square[field_multiply(q, x, x)] = true;
  LabeledGraph g(q);
  for (int x = 0; x < q; ++x) {
    for (int y = x + 1; y < q; ++y) {
      if (square[field_subtract(q, x, y)]) g.set_edge(x, y, true);
    }
  }
  return g;
}

LabeledGraph cayley2(std::span<const int> params) {
  require(!params.empty(), "cayley2", "expects dimension followed by weights");
  const int n = params[0];
  require(n >= 1 && n <= 12, "cayley2", "dimension must lie in 1..12");
  std::vector<bool> weight(n + 1, false);
  for (std::size_t i = 1; i < params.size(); ++i) {
    const int w = params[i];
    require(w >= 0 && w <= n, "cayley2", "weight " + std::to_string(w) + " outside 0..n");
    require(!weight[w], "cayley2", "weights must be distinct");
    weight[w] = true;
  }
  const int size = 1 << n;
  AdjacencyMatrix a(size, size);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) a(x, y) = weight[std::popcount(static_cast<unsigned>(x ^ y))];
  }
  return LabeledGraph(std::move(a));
}

}  // namespace

bool is_fixed_name(std::string_view name) { return fixed_graphs().contains(name); }

LabeledGraph build_named(std::string_view name, std::span<const int> params) {
  if (auto it = fixed_graphs().find(name); it != fixed_graphs().end()) {
    require_count(name, params, 0);
    return LabeledGraph::from_edges(it->second.first, it->second.second);
  }
  if (name == "K" || name == "A" || name == "C" || name == "P" || name == "loopK") {
    require_count(name, params, 1);
    const int n = params[0];
    require(n >= 1, name, "order must be positive");
    if (name == "K") return clique(n, false);
    if (name == "loopK") return clique(n, true);
    if (name == "A") return LabeledGraph(n);
    if (name == "P") return path(n);
    require(n >= 3, name, "cycle needs at least 3 vertices");
    return cycle(n);
  }
  if (name == "Kpart") {
    require(!params.empty(), name, "expects at least one part size");
    return complete_multipartite(params);
  }
  if (name == "paley") {
    require_count(name, params, 1);
    return paley(params[0]);
  }
  if (name == "cayley2") return cayley2(params);
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

}  // namespace inducibility
