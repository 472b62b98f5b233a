#pragma once

#include <string>
#include <vector>

#include "inducibility/labeled_graph.hpp"
#include "inducibility/partitions.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/spectral.hpp"

namespace inducibility {

/// The linear map r_t(G') -> r_t(G ⊙ G') for a fixed loopless base graph G
/// on s >= 2 vertices.
///
///   r(H, G⊙G') = sum over H-admissible partitions λ of
///                (s)_ℓ / s^t · p(H[λ], G) · sum_{H' ∈ Γ(H,λ)} r(H', G')
///
/// where ℓ is the number of parts and Γ(H,λ) are the labeled graphs agreeing
/// with H inside every part. p(·, G) at orders ℓ < min(s,t) comes from
/// projecting the labeled induced profile p_{min(s,t)}(G).
class CompositionOperator {
 public:
  CompositionOperator(const LabeledGraph& base, int t);

  int order() const { return t_; }
  int base_order() const { return s_; }

  LabeledProfile<Rational> apply(const LabeledProfile<Rational>& r) const;

  /// f_t(G) over labeled graphs; column H' holds the image of the point mass at H'.
  RationalMatrix labeled_matrix() const;

  /// F_t(G) over isomorphism types (iso_table order), column-stochastic.
  RationalMatrix type_matrix() const;

 private:
  struct Term {
    int partition = 0;  // index into set_partitions(t)
    Rational coefficient;
  };

  int t_;
  int s_;
  std::vector<std::vector<Term>> terms_;  // per labeled graph H
};

struct TransitionMatrix {
  int t = 0;
  std::string base;                // graph6 of the base graph
  std::vector<std::string> basis;  // type names, iso_table order
  RationalMatrix entries;
};

/// Fixed point of the composition map: the limiting profile of G^{⊙n}.
struct NestedProfile {
  int t = 0;
  std::string base;
  LabeledProfile<Rational> labeled;  // q_t(G)
  ProfileVector<Rational> types;     // Q_t(G) = q · |orbit|
};

LabeledProfile<Rational> compose_profile(const LabeledGraph& base, const LabeledProfile<Rational>& r);

TransitionMatrix transition_matrix(const LabeledGraph& base, int t);

/// Throws DegenerateKernel unless F_t(G) - I has a one-dimensional kernel
/// spanned by a nonnegative vector.
NestedProfile stationary_profile(const LabeledGraph& base, int t);

SpectralProfile<Rational> nested_spectral(const LabeledGraph& base, int t);

/// r_t(G^{⊙n}) for n >= 1.
LabeledProfile<Rational> iterate_profile(const LabeledGraph& base, int t, int n);

}  // namespace inducibility
