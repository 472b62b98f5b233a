#include "inducibility/iso_table.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace inducibility {

LabeledMask induced_mask(const LabeledGraph& g, std::span<const int> vertices) {
  const int t = static_cast<int>(vertices.size());
  LabeledMask mask = 0;
  int bit = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++bit) {
      if (g.adjacent(vertices[i], vertices[j])) mask |= LabeledMask{1} << bit;
    }
  }
  return mask;
}

LabeledGraph graph_from_mask(LabeledMask mask, int t) {
  LabeledGraph g(t);
  int bit = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++bit) {
      if ((mask >> bit) & 1) g.set_edge(i, j, true);
    }
  }
  return g;
}

LabeledMask permute_mask(LabeledMask mask, std::span<const int> perm, int t) {
  LabeledMask out = 0;
  int bit = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++bit) {
      if ((mask >> bit) & 1) out |= LabeledMask{1} << slot_index(perm[i], perm[j], t);
    }
  }
  return out;
}

namespace {

const std::vector<std::string>& order4_basis() {
  static const std::vector<std::string> basis = {"K4", "A4", "T4", "S4", "M4", "C4",
                                                 "Q4", "V4", "D4", "E4", "P4"};
  return basis;
}

std::vector<std::pair<std::string, LabeledGraph>> named_types(int t) {
  std::vector<std::pair<std::string, LabeledGraph>> out;
  auto add = [&](std::string name, LabeledGraph g) { out.emplace_back(std::move(name), std::move(g)); };
  const std::array<int, 1> order{t};
  switch (t) {
    case 2:
      add("A2", build_named("A", order));
      add("K2", build_named("K", order));
      break;
    case 3:
      add("A3", build_named("A", order));
      add("E3", LabeledGraph::from_edges(3, std::array{std::pair{0, 1}}));
      add("P3", build_named("P", order));
      add("K3", build_named("K", order));
      break;
    case 4:
      for (const auto& name : order4_basis()) {
        if (name == "K4" || name == "A4" || name == "C4" || name == "P4") {
          add(name, build_named(name.substr(0, 1), order));
        } else {
          add(name, build_named(name));
        }
      }
      break;
    case 5:
      add("K5", build_named("K", order));
      add("A5", build_named("A", order));
      add("C5", build_named("C", order));
      add("P5", build_named("P", order));
      add("bull", build_named("bull"));
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

IsoTable::IsoTable(int t) : t_(t), type_of_mask_(labeled_count(t), -1) {
  std::map<std::uint64_t, int> by_code;
  for (LabeledMask mask = 0; mask < labeled_count(t); ++mask) {
    const LabeledGraph g = graph_from_mask(mask, t);
    const CanonicalCode code = canonical_form(g);
    auto [it, inserted] = by_code.emplace(code.bits, static_cast<int>(entries_.size()));
    if (inserted) {
      IsoEntry e;
      e.code = code;
      e.representative = mask;
      e.aut_count = static_cast<int>(code.aut_count);
      e.edges = g.edge_count();
      entries_.push_back(std::move(e));
    }
    ++entries_[it->second].orbit_size;
    type_of_mask_[mask] = it->second;
  }

  for (const auto& [name, g] : named_types(t)) {
    const auto code = canonical_form(g);
    entries_[by_code.at(code.bits)].name = name;
  }
  for (auto& e : entries_) {
    if (e.name.empty()) e.name = "G" + std::to_string(t) + "_" + std::to_string(e.code.bits);
  }

  std::vector<int> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (t == 4) {
    const auto& basis = order4_basis();
    auto rank = [&](int i) {
      return std::find(basis.begin(), basis.end(), entries_[i].name) - basis.begin();
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rank(a) < rank(b); });
  } else {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (entries_[a].edges != entries_[b].edges) return entries_[a].edges < entries_[b].edges;
      return entries_[a].code.bits < entries_[b].code.bits;
    });
  }
  std::vector<IsoEntry> sorted;
  std::vector<int> new_index(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    sorted.push_back(std::move(entries_[order[i]]));
  }
  entries_ = std::move(sorted);
  for (auto& idx : type_of_mask_) idx = new_index[idx];
}

int IsoTable::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return -1;
}

int IsoTable::find(const LabeledGraph& g) const {
  if (g.order() != t_ || g.has_loops()) return -1;
  std::vector<int> all(t_);
  for (int i = 0; i < t_; ++i) all[i] = i;
  return type_of(induced_mask(g, all));
}

std::vector<std::string> IsoTable::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

const IsoTable& iso_table(int t) {
  if (t < 2 || t > kMaxOrder) {
    throw std::invalid_argument("isomorphism tables exist for 2 <= t <= 5, got " + std::to_string(t));
  }
  static std::array<std::unique_ptr<IsoTable>, kMaxOrder + 1> tables;
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  std::call_once(flags[t], [t] { tables[t].reset(new IsoTable(t)); });
  return *tables[t];
}

}  // namespace inducibility
