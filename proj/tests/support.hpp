#pragma once

// Glue between the library types and the brute-force oracles.

#include <initializer_list>
#include <map>
#include <string_view>
#include <vector>

#include "inducibility/iso_table.hpp"
#include "inducibility/labeled_graph.hpp"
#include "inducibility/profile.hpp"
#include "oracles.hpp"

namespace support {

using namespace inducibility;

inline LabeledGraph named(std::string_view name, std::initializer_list<int> params = {}) {
  std::vector<int> p(params);
  return build_named(name, p);
}

inline LabeledGraph from_adj(const oracle::Adj& a) {
  const int n = static_cast<int>(a.size());
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (a[i][j]) g.set_edge(i, j, true);
  return g;
}

inline oracle::Adj to_adj(const LabeledGraph& g) {
  oracle::Adj a = oracle::empty(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a[i][j] = g.adjacent(i, j);
  return a;
}

/// Oracle map rearranged into iso_table(t) order.
inline Vector<Rational> by_table(const std::map<std::uint32_t, Rational>& m, int t) {
  const IsoTable& table = iso_table(t);
  Vector<Rational> out = Vector<Rational>::Zero(table.size());
  for (int i = 0; i < table.size(); ++i) {
    auto it = m.find(oracle::mask_key(table[i].representative, t));
    if (it != m.end()) out(i) = it->second;
  }
  return out;
}

/// Unlabeled view of a labeled profile, computed without the library's
/// orbit tables.
inline std::map<std::uint32_t, Rational> oracle_unlabeled(const Vector<Rational>& labeled, int t) {
  std::map<std::uint32_t, Rational> out;
  for (Eigen::Index m = 0; m < labeled.size(); ++m) {
    if (labeled(m) != 0) out[oracle::mask_key(static_cast<std::uint32_t>(m), t)] += labeled(m);
  }
  return out;
}

inline std::vector<Rational> to_std(const Vector<Rational>& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace support
