#pragma once

#include "inducibility/rational.hpp"

namespace inducibility {

/// Closed-form inducibility bounds at order t.
struct ClosedFormBounds {
  int t = 0;
  Rational pippenger_golumbic;  // t! / (t^t - t): every t-vertex graph, by its nested blow-up
  Rational exoo;                // t! / ((t+1)^(t-1) - 1): P_t, by the nested blow-up of C_{t+1}
  Rational path_upper;          // t! / (2 (t-1)^(t-1)): upper bound for P_t
};

ClosedFormBounds closed_form_bounds(int t);

}  // namespace inducibility
