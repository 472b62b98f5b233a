#include "inducibility/profile.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "inducibility/errors.hpp"
#include "inducibility/partitions.hpp"
#include "parallel.hpp"

namespace inducibility {

template <typename Scalar>
const Scalar& ProfileVector<Scalar>::at(std::string_view name) const {
  const int idx = iso_table(t).find(name);
  if (idx < 0) throw std::invalid_argument("no type named " + std::string(name) + " at order " + std::to_string(t));
  return values(idx);
}

template struct ProfileVector<Rational>;
template struct ProfileVector<double>;

QuantumGraph QuantumGraph::from_names(int t, const std::vector<std::pair<std::string, Rational>>& terms) {
  const IsoTable& table = iso_table(t);
  QuantumGraph q{t, {}};
  for (const auto& [name, coeff] : terms) {
    const int idx = table.find(name);
    if (idx < 0) throw std::invalid_argument("no type named " + name + " at order " + std::to_string(t));
    q.terms.emplace_back(idx, coeff);
  }
  return q;
}

QuantumGraph QuantumGraph::sum_of(int t, const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& n : names) terms.emplace_back(n, Rational(1));
  return from_names(t, terms);
}

template <typename Scalar>
ProfileVector<Scalar> to_unlabeled(const LabeledProfile<Scalar>& r) {
  const IsoTable& table = iso_table(r.t);
  ProfileVector<Scalar> out{r.t, r.flavor, Vector<Scalar>::Zero(table.size())};
  for (Eigen::Index mask = 0; mask < r.values.size(); ++mask) {
    out.values(table.type_of(static_cast<LabeledMask>(mask))) += r.values(mask);
  }
  return out;
}

template <typename Scalar>
LabeledProfile<Scalar> to_labeled(const ProfileVector<Scalar>& R) {
  const IsoTable& table = iso_table(R.t);
  LabeledProfile<Scalar> out{R.t, R.flavor, Vector<Scalar>(labeled_count(R.t))};
  for (Eigen::Index mask = 0; mask < out.values.size(); ++mask) {
    const int type = table.type_of(static_cast<LabeledMask>(mask));
    out.values(mask) = R.values(type) / Scalar(table[type].orbit_size);
  }
  return out;
}

template ProfileVector<Rational> to_unlabeled(const LabeledProfile<Rational>&);
template ProfileVector<double> to_unlabeled(const LabeledProfile<double>&);
template LabeledProfile<Rational> to_labeled(const ProfileVector<Rational>&);
template LabeledProfile<double> to_labeled(const ProfileVector<double>&);

namespace {

using detail::run_shards;

void check_order(int t) {
  if (t < 2 || t > kMaxOrder) {
    throw std::invalid_argument("profile order must lie in 2..5, got " + std::to_string(t));
  }
}

// ---------------------------------------------------------------------------
// Induced profile: ordered enumeration of t-subsets.

void count_subsets(const std::vector<std::uint8_t>& adj, int s, int t, int first,
                   std::vector<std::uint64_t>& counts) {
  std::array<int, kMaxOrder> chosen{};
  std::array<std::vector<LabeledMask>, kMaxOrder> contrib;
  for (auto& c : contrib) c.assign(s, 0);
  auto rec = [&](auto&& self, int level, LabeledMask mask) -> void {
    const int lo = chosen[level - 1] + 1;
    auto& bits = contrib[level];
    for (int v = lo; v < s; ++v) {
      LabeledMask b = 0;
      for (int i = 0; i < level; ++i) {
        if (adj[static_cast<std::size_t>(chosen[i]) * s + v]) b |= LabeledMask{1} << slot_index(i, level, t);
      }
      bits[v] = b;
    }
    if (level == t - 1) {
      for (int v = lo; v < s; ++v) ++counts[mask | bits[v]];
      return;
    }
    for (int v = lo; v < s; ++v) {
      chosen[level] = v;
      self(self, level + 1, mask | bits[v]);
    }
  };
  chosen[0] = first;
  rec(rec, 1, 0);
}

std::vector<std::uint8_t> flat_adjacency(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(u) * n + v] = g.adjacency()(u, v);
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Repetitive profile: weighted enumeration of type assignments.

Integer to_integer(std::uint64_t x) { return Integer(x); }
Integer to_integer(unsigned __int128 x) {
  Integer hi(static_cast<std::uint64_t>(x >> 64));
  Integer lo(static_cast<std::uint64_t>(x));
  return (hi << 64) | lo;
}
Integer to_integer(const Integer& x) { return x; }

template <typename Acc>
Acc from_integer(const Integer& x) {
  if constexpr (std::is_same_v<Acc, Integer>) {
    return x;
  } else if constexpr (std::is_same_v<Acc, unsigned __int128>) {
    const Integer hi = x >> 64;
    const Integer lo = x - (hi << 64);
    return (static_cast<unsigned __int128>(hi.convert_to<std::uint64_t>()) << 64) |
           lo.convert_to<std::uint64_t>();
  } else {
    return x.convert_to<Acc>();
  }
}

// Numerators of masses and edge probabilities over common denominators.
template <typename Acc>
struct AssignmentWeights {
  int k = 0;
  int t = 0;
  bool deterministic = false;
  std::vector<Acc> mass;
  std::vector<Acc> edge;  // numerator of w(a, b), row-major k x k
  std::vector<Acc> gap;   // numerator of 1 - w(a, b)
  std::vector<std::uint8_t> adj;
};

template <typename Acc>
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(const AssignmentWeights<Acc>& w, std::vector<Acc>& acc) : w_(w), acc_(acc) {}

  void run_first(int c) {
    phi_[0] = c;
    if (w_.t == 1) {
      acc_[0] += w_.mass[c];
      return;
    }
    descend(1, w_.mass[c], 0);
  }

 private:
  void descend(int pos, const Acc& weight, LabeledMask mask) {
    for (int c = 0; c < w_.k; ++c) {
      phi_[pos] = c;
      const Acc wc = weight * w_.mass[c];
      if (w_.deterministic) {
        LabeledMask bits = mask;
        for (int i = 0; i < pos; ++i) {
          if (w_.adj[static_cast<std::size_t>(phi_[i]) * w_.k + c]) bits |= LabeledMask{1} << slot_index(i, pos, w_.t);
        }
        leaf_or_descend(pos, wc, bits);
      } else {
        branch(pos, 0, wc, mask);
      }
    }
  }

  void branch(int pos, int i, const Acc& weight, LabeledMask mask) {
    if (i == pos) {
      leaf_or_descend(pos, weight, mask);
      return;
    }
    const std::size_t cell = static_cast<std::size_t>(phi_[i]) * w_.k + phi_[pos];
    if (w_.edge[cell] != Acc(0)) {
      branch(pos, i + 1, weight * w_.edge[cell], mask | (LabeledMask{1} << slot_index(i, pos, w_.t)));
    }
    if (w_.gap[cell] != Acc(0)) branch(pos, i + 1, weight * w_.gap[cell], mask);
  }

  void leaf_or_descend(int pos, const Acc& weight, LabeledMask mask) {
    if (pos + 1 == w_.t) {
      acc_[mask] += weight;
    } else {
      descend(pos + 1, weight, mask);
    }
  }

  const AssignmentWeights<Acc>& w_;
  std::vector<Acc>& acc_;
  std::array<int, kMaxOrder> phi_{};
};

template <typename Acc>
std::vector<Acc> accumulate_assignments(const AssignmentWeights<Acc>& w) {
  const std::size_t size = labeled_count(std::max(w.t, 2));
  std::vector<std::vector<Acc>> partial(w.k, std::vector<Acc>());
  run_shards(w.k, [&](int c) {
    partial[c].assign(size, Acc(0));
    AssignmentEnumerator<Acc>(w, partial[c]).run_first(c);
  });
  std::vector<Acc> total(size, Acc(0));
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < size; ++i) total[i] += p[i];
  }
  return total;
}

// Counting fast path: 0/1 weights and uniform masses (models of graphs).
std::vector<std::uint64_t> count_uniform_assignments(const std::vector<std::uint8_t>& adj, int k, int t) {
  std::vector<std::vector<std::uint64_t>> partial(k);
  run_shards(k, [&](int first) {
    auto& counts = partial[first];
    counts.assign(labeled_count(t), 0);
    std::array<int, kMaxOrder> phi{};
    std::array<std::vector<LabeledMask>, kMaxOrder> contrib;
    for (auto& c : contrib) c.assign(k, 0);
    auto rec = [&](auto&& self, int level, LabeledMask mask) -> void {
      auto& bits = contrib[level];
      for (int c = 0; c < k; ++c) {
        LabeledMask b = 0;
        for (int i = 0; i < level; ++i) {
          if (adj[static_cast<std::size_t>(phi[i]) * k + c]) b |= LabeledMask{1} << slot_index(i, level, t);
        }
        bits[c] = b;
      }
      if (level == t - 1) {
        for (int c = 0; c < k; ++c) ++counts[mask | bits[c]];
        return;
      }
      for (int c = 0; c < k; ++c) {
        phi[level] = c;
        self(self, level + 1, mask | bits[c]);
      }
    };
    phi[0] = first;
    rec(rec, 1, 0);
  });
  std::vector<std::uint64_t> total(labeled_count(t), 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
  }
  return total;
}

Integer lcm_of_denominators(const Vector<Rational>& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, Integer(denominator(v(i))));
  return l;
}

Integer lcm_of_denominators(const Matrix<Rational>& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) l = boost::multiprecision::lcm(l, Integer(denominator(m(i))));
  return l;
}

template <typename Acc>
LabeledProfile<Rational> exact_repetitive(const ExactModel& model, int t, const Integer& mass_den,
                                          const Integer& weight_den, const Integer& total) {
  const int k = model.types();
  AssignmentWeights<Acc> w;
  w.k = k;
  w.t = t;
  w.deterministic = model.is_deterministic();
  for (int c = 0; c < k; ++c) {
    w.mass.push_back(from_integer<Acc>(Integer(numerator(model.mass()(c) * Rational(mass_den)))));
  }
  w.adj.resize(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const Integer e(numerator(model.weight()(a, b) * Rational(weight_den)));
      w.edge.push_back(from_integer<Acc>(e));
      w.gap.push_back(from_integer<Acc>(weight_den - e));
      w.adj[static_cast<std::size_t>(a) * k + b] = model.weight()(a, b) == 1 ? 1 : 0;
    }
  }
  const auto acc = accumulate_assignments(w);
  LabeledProfile<Rational> out{t, Flavor::Repetitive, Vector<Rational>(acc.size())};
  for (std::size_t i = 0; i < acc.size(); ++i) out.values(i) = Rational(to_integer(acc[i]), total);
  return out;
}

void check_assignment_budget(int k, int t, std::uint64_t budget) {
  long double work = 1;
  for (int i = 0; i < t; ++i) work *= k;
  if (work > static_cast<long double>(budget)) {
    throw BudgetExceeded("repetitive profile needs " + std::to_string(k) + "^" + std::to_string(t) +
                         " assignments, above the budget of " + std::to_string(budget));
  }
}

}  // namespace

LabeledProfile<Rational> labeled_induced_profile(const LabeledGraph& g, int t, std::uint64_t budget) {
  return to_labeled(induced_profile(g, t, budget));
}

ProfileVector<Rational> induced_profile(const LabeledGraph& g, int t, std::uint64_t budget) {
  check_order(t);
  if (g.has_loops()) throw std::invalid_argument("induced profiles require a loopless graph");
  const int s = g.order();
  if (s < t) {
    throw std::invalid_argument("graph has " + std::to_string(s) + " vertices, fewer than t = " + std::to_string(t));
  }
  const std::uint64_t subsets = binomial(s, t);
  if (subsets > budget) {
    throw BudgetExceeded("induced profile needs C(" + std::to_string(s) + "," + std::to_string(t) +
                         ") = " + std::to_string(subsets) + " subsets, above the budget of " +
                         std::to_string(budget));
  }
  const auto adj = flat_adjacency(g);
  std::vector<std::vector<std::uint64_t>> partial(s);
  run_shards(s - t + 1, [&](int first) {
    partial[first].assign(labeled_count(t), 0);
    count_subsets(adj, s, t, first, partial[first]);
  });
  const IsoTable& table = iso_table(t);
  std::vector<std::uint64_t> per_type(table.size(), 0);
  for (const auto& counts : partial) {
    for (std::size_t mask = 0; mask < counts.size(); ++mask) {
      per_type[table.type_of(static_cast<LabeledMask>(mask))] += counts[mask];
    }
  }
  ProfileVector<Rational> out{t, Flavor::Induced, Vector<Rational>(table.size())};
  for (int i = 0; i < table.size(); ++i) out.values(i) = Rational(Integer(per_type[i]), Integer(subsets));
  return out;
}

LabeledProfile<Rational> labeled_repetitive_profile(const ExactModel& model, int t, std::uint64_t budget) {
  check_order(t);
  const int k = model.types();
  check_assignment_budget(k, t, budget);
  const Rational first = model.mass()(0);
  const bool uniform = (model.mass().array() == first).all();
  if (model.is_deterministic() && uniform) {
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) adj[static_cast<std::size_t>(a) * k + b] = model.weight()(a, b) == 1 ? 1 : 0;
    }
    const auto counts = count_uniform_assignments(adj, k, t);
    const Integer total = pow(Integer(k), t);
    LabeledProfile<Rational> out{t, Flavor::Repetitive, Vector<Rational>(counts.size())};
    for (std::size_t i = 0; i < counts.size(); ++i) out.values(i) = Rational(Integer(counts[i]), total);
    return out;
  }
  const Integer mass_den = lcm_of_denominators(model.mass());
  const Integer weight_den = model.is_deterministic() ? Integer(1) : lcm_of_denominators(model.weight());
  const Integer total = pow(mass_den, t) * pow(weight_den, pair_count(t));
  if (total < (Integer(1) << 63)) return exact_repetitive<std::uint64_t>(model, t, mass_den, weight_den, total);
  if (total < (Integer(1) << 127)) {
    return exact_repetitive<unsigned __int128>(model, t, mass_den, weight_den, total);
  }
  return exact_repetitive<Integer>(model, t, mass_den, weight_den, total);
}

LabeledProfile<double> labeled_repetitive_profile(const ApproxModel& model, int t, std::uint64_t budget) {
  check_order(t);
  const int k = model.types();
  check_assignment_budget(k, t, budget);
  AssignmentWeights<double> w;
  w.k = k;
  w.t = t;
  w.deterministic = false;
  for (int c = 0; c < k; ++c) w.mass.push_back(model.mass()(c));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      w.edge.push_back(model.weight()(a, b));
      w.gap.push_back(1.0 - model.weight()(a, b));
    }
  }
  const auto acc = accumulate_assignments(w);
  LabeledProfile<double> out{t, Flavor::Repetitive, Vector<double>(acc.size())};
  for (std::size_t i = 0; i < acc.size(); ++i) out.values(i) = acc[i];
  return out;
}

template <typename Scalar>
ProfileVector<Scalar> repetitive_profile(const StepModel<Scalar>& model, int t, std::uint64_t budget) {
  return to_unlabeled(labeled_repetitive_profile(model, t, budget));
}

template ProfileVector<Rational> repetitive_profile(const ExactModel&, int, std::uint64_t);
template ProfileVector<double> repetitive_profile(const ApproxModel&, int, std::uint64_t);

LabeledProfile<Rational> project_prefix(const LabeledProfile<Rational>& p, int l) {
  if (l < 1 || l > p.t) throw std::invalid_argument("projection length out of range");
  std::vector<int> prefix(l);
  for (int i = 0; i < l; ++i) prefix[i] = i;
  LabeledProfile<Rational> out{l, p.flavor, Vector<Rational>::Zero(labeled_count(l))};
  for (Eigen::Index mask = 0; mask < p.values.size(); ++mask) {
    out.values(restrict_mask(static_cast<LabeledMask>(mask), p.t, prefix)) += p.values(mask);
  }
  return out;
}

ProfileVector<Rational> repetitive_from_induced(const ProfileVector<Rational>& induced, int s, int t) {
  check_order(t);
  if (induced.t != t) throw std::invalid_argument("induced profile order does not match t");
  if (s < t) throw std::invalid_argument("source graph must have at least t vertices");
  const auto p = to_labeled(induced);
  std::vector<LabeledProfile<Rational>> by_length(t + 1);
  for (int l = 1; l <= t; ++l) by_length[l] = project_prefix(p, l);
  const Rational scale = Rational(1) / Rational(pow(Integer(s), t));

  LabeledProfile<Rational> r{t, Flavor::Repetitive, Vector<Rational>::Zero(labeled_count(t))};
  for (LabeledMask h = 0; h < labeled_count(t); ++h) {
    for (const auto& lambda : set_partitions(t)) {
      // With a single-vertex inner graph every part must be an anticlique.
      if ((h & lambda.within) != 0 || !is_admissible(lambda, h)) continue;
      const int l = lambda.size();
      const std::int64_t ff = falling_factorial(s, l);
      if (ff == 0) continue;
      r.values(h) += Rational(ff) * scale * by_length[l].values(quotient_mask(lambda, h));
    }
  }
  return to_unlabeled(r);
}

template <typename Scalar>
Scalar quantum_density(const QuantumGraph& q, const ProfileVector<Scalar>& profile) {
  if (q.t != profile.t) throw std::invalid_argument("quantum graph and profile orders differ");
  Scalar sum(0);
  for (const auto& [type, coeff] : q.terms) sum += from_rational<Scalar>(coeff) * profile.values(type);
  return sum;
}

template Rational quantum_density(const QuantumGraph&, const ProfileVector<Rational>&);
template double quantum_density(const QuantumGraph&, const ProfileVector<double>&);

}  // namespace inducibility
