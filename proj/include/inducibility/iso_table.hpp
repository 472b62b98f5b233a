#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inducibility/labeled_graph.hpp"

namespace inducibility {

/// Largest sample order with isomorphism tables and exact profiles.
inline constexpr int kMaxOrder = 5;

/// Labeled t-vertex graphs are m-bit masks, m = t(t-1)/2. Bit s is the
/// s-th vertex pair in lexicographic order (0,1),(0,2),...,(0,t-1),(1,2),...
using LabeledMask = std::uint32_t;

constexpr int pair_count(int t) { return t * (t - 1) / 2; }

constexpr int slot_index(int i, int j, int t) {
  if (i > j) std::swap(i, j);
  return i * (2 * t - i - 1) / 2 + (j - i - 1);
}

constexpr LabeledMask full_mask(int t) { return (LabeledMask{1} << pair_count(t)) - 1; }

constexpr std::size_t labeled_count(int t) { return std::size_t{1} << pair_count(t); }

/// Mask of the graph induced on the positions `vertices` (repeats allowed;
/// a repeated vertex contributes its loop bit).
LabeledMask induced_mask(const LabeledGraph& g, std::span<const int> vertices);

LabeledGraph graph_from_mask(LabeledMask mask, int t);

/// Mask after relabeling position i as perm[i].
LabeledMask permute_mask(LabeledMask mask, std::span<const int> perm, int t);

struct IsoEntry {
  std::string name;
  CanonicalCode code;
  LabeledMask representative = 0;  // smallest mask in the orbit
  int orbit_size = 0;
  int aut_count = 0;
  int edges = 0;
};

/// All isomorphism types of t-vertex graphs, 2 <= t <= 5.
///
/// At t = 4 the entries follow the basis K4, A4, T4, S4, M4, C4, Q4, V4, D4,
/// E4, P4. Other orders are sorted by edge count, then canonical code.
class IsoTable {
 public:
  int order() const { return t_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const IsoEntry& operator[](int i) const { return entries_[i]; }
  const std::vector<IsoEntry>& entries() const { return entries_; }

  int type_of(LabeledMask mask) const { return type_of_mask_[mask]; }

  /// Index of the entry with this name; -1 when absent.
  int find(std::string_view name) const;
  /// Index of the entry isomorphic to g (g must have order t, no loops).
  int find(const LabeledGraph& g) const;

  std::vector<std::string> names() const;

 private:
  friend const IsoTable& iso_table(int t);
  IsoTable(int t);

  int t_;
  std::vector<IsoEntry> entries_;
  std::vector<int> type_of_mask_;
};

const IsoTable& iso_table(int t);

}  // namespace inducibility
