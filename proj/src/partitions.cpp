#include "inducibility/partitions.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace inducibility {

namespace {

std::vector<SetPartition> enumerate_partitions(int t) {
  std::vector<SetPartition> out;
  std::vector<int> growth(t, 0);
  // Restricted growth strings: growth[0] = 0, growth[i] <= 1 + max(growth[0..i-1]).
  auto emit = [&] {
    SetPartition p;
    p.t = t;
    p.part_of = growth;
    for (int i = 0; i < t; ++i) {
      if (growth[i] == static_cast<int>(p.parts.size())) p.parts.emplace_back();
      p.parts[growth[i]].push_back(i);
    }
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) {
        if (growth[i] == growth[j]) p.within |= LabeledMask{1} << slot_index(i, j, t);
      }
    }
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == t) {
      emit();
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      growth[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  if (t >= 1) rec(rec, 1, 0);
  return out;
}

}  // namespace

const std::vector<SetPartition>& set_partitions(int t) {
  if (t < 1 || t > kMaxOrder) {
    throw std::invalid_argument("set partitions supported for 1 <= t <= 5, got " + std::to_string(t));
  }
  static std::array<std::vector<SetPartition>, kMaxOrder + 1> cache;
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  std::call_once(flags[t], [t] { cache[t] = enumerate_partitions(t); });
  return cache[t];
}

bool is_admissible(const SetPartition& lambda, LabeledMask h) {
  const int t = lambda.t;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const int a = lambda.part_of[i], b = lambda.part_of[j];
      if (a == b) continue;
      const int ra = lambda.parts[a].front(), rb = lambda.parts[b].front();
      const bool bit = (h >> slot_index(i, j, t)) & 1;
      const bool rep = (h >> slot_index(ra, rb, t)) & 1;
      if (bit != rep) return false;
    }
  }
  return true;
}

LabeledMask quotient_mask(const SetPartition& lambda, LabeledMask h) {
  const int l = lambda.size();
  LabeledMask out = 0;
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      const int i = lambda.parts[a].front(), j = lambda.parts[b].front();
      if ((h >> slot_index(i, j, lambda.t)) & 1) out |= LabeledMask{1} << slot_index(a, b, l);
    }
  }
  return out;
}

std::vector<SetPartition> admissible_partitions(LabeledMask h, int t) {
  std::vector<SetPartition> out;
  for (const auto& lambda : set_partitions(t)) {
    if (is_admissible(lambda, h)) out.push_back(lambda);
  }
  return out;
}

LabeledMask restrict_mask(LabeledMask h, int t, std::span<const int> positions) {
  const int l = static_cast<int>(positions.size());
  LabeledMask out = 0;
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      if ((h >> slot_index(positions[a], positions[b], t)) & 1) {
        out |= LabeledMask{1} << slot_index(a, b, l);
      }
    }
  }
  return out;
}

}  // namespace inducibility
