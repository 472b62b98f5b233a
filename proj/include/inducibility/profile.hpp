#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "inducibility/iso_table.hpp"
#include "inducibility/labeled_graph.hpp"
#include "inducibility/rational.hpp"
#include "inducibility/step_model.hpp"

namespace inducibility {

/// Induced profiles sample without replacement, repetitive ones with.
enum class Flavor { Induced, Repetitive };

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000'000ULL;
inline constexpr std::uint64_t kDefaultAssignmentBudget = 10'000'000'000ULL;

/// Density per isomorphism type, indexed like iso_table(t).
template <typename Scalar>
struct ProfileVector {
  int t = 0;
  Flavor flavor = Flavor::Repetitive;
  Vector<Scalar> values;

  const Scalar& operator[](int type) const { return values(type); }
  /// Value of the type with the given table name; throws if unknown.
  const Scalar& at(std::string_view name) const;
};

/// Density per labeled t-graph (ordered sample), indexed by LabeledMask.
template <typename Scalar>
struct LabeledProfile {
  int t = 0;
  Flavor flavor = Flavor::Repetitive;
  Vector<Scalar> values;

  const Scalar& operator[](LabeledMask mask) const { return values(mask); }
};

/// Formal rational combination of isomorphism types of one order.
struct QuantumGraph {
  int t = 0;
  std::vector<std::pair<int, Rational>> terms;  // (type index, coefficient)

  /// Builds from (type name, coefficient) pairs; throws on unknown names.
  static QuantumGraph from_names(int t, const std::vector<std::pair<std::string, Rational>>& terms);
  /// H1 + H2, e.g. K4 + A4.
  static QuantumGraph sum_of(int t, const std::vector<std::string>& names);
};

/// Sum over labeled graphs of each type: R(H) = sum of r over orbit(H).
template <typename Scalar>
ProfileVector<Scalar> to_unlabeled(const LabeledProfile<Scalar>& r);

/// Spreads each type's density uniformly over its orbit: r(H) = R(H)/|orbit(H)|.
template <typename Scalar>
LabeledProfile<Scalar> to_labeled(const ProfileVector<Scalar>& R);

/// P_t(G) by exhaustive enumeration of t-subsets. G must be loopless.
ProfileVector<Rational> induced_profile(const LabeledGraph& g, int t,
                                        std::uint64_t budget = kDefaultSubsetBudget);
LabeledProfile<Rational> labeled_induced_profile(const LabeledGraph& g, int t,
                                                 std::uint64_t budget = kDefaultSubsetBudget);

/// R_t(M) by exact summation over all k^t type assignments.
LabeledProfile<Rational> labeled_repetitive_profile(const ExactModel& model, int t,
                                                    std::uint64_t budget = kDefaultAssignmentBudget);
LabeledProfile<double> labeled_repetitive_profile(const ApproxModel& model, int t,
                                                  std::uint64_t budget = kDefaultAssignmentBudget);
template <typename Scalar>
ProfileVector<Scalar> repetitive_profile(const StepModel<Scalar>& model, int t,
                                         std::uint64_t budget = kDefaultAssignmentBudget);

/// Projection of a labeled profile onto its first l positions.
LabeledProfile<Rational> project_prefix(const LabeledProfile<Rational>& p, int l);

/// Repetitive t-profile of a loopless s-vertex graph from its induced
/// t-profile, by conditioning on which sample positions coincide.
ProfileVector<Rational> repetitive_from_induced(const ProfileVector<Rational>& induced, int s, int t);

template <typename Scalar>
Scalar quantum_density(const QuantumGraph& q, const ProfileVector<Scalar>& profile);

extern template struct ProfileVector<Rational>;
extern template struct ProfileVector<double>;

}  // namespace inducibility
