#pragma once

#include <span>
#include <vector>

#include "inducibility/iso_table.hpp"

namespace inducibility {

/// Partition of the positions 0..t-1; parts are ordered by minimum element.
struct SetPartition {
  int t = 0;
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;  // position -> part index
  LabeledMask within = 0;    // pair slots with both ends in one part

  int size() const { return static_cast<int>(parts.size()); }
};

/// All Bell(t) partitions of 0..t-1 in a fixed order (restricted growth strings).
const std::vector<SetPartition>& set_partitions(int t);

/// Every transversal of the partition induces the same labeled graph, i.e.
/// adjacency between any two parts is all-present or all-absent.
bool is_admissible(const SetPartition& lambda, LabeledMask h);

/// The labeled graph on parts induced by any transversal (H[lambda]).
LabeledMask quotient_mask(const SetPartition& lambda, LabeledMask h);

std::vector<SetPartition> admissible_partitions(LabeledMask h, int t);

/// Mask of the graph induced on `positions` (strictly increasing) of a
/// labeled t-graph, relabeled 0..|positions|-1.
LabeledMask restrict_mask(LabeledMask h, int t, std::span<const int> positions);

}  // namespace inducibility
