#pragma once

#include <vector>

#include "inducibility/rational.hpp"

namespace inducibility {

/// Reduced row echelon form by exact Gaussian elimination. Pivots are taken
/// column by column, choosing the first row (top-down) with a nonzero entry.
/// Returns the pivot column of each pivot row.
std::vector<Eigen::Index> row_reduce(RationalMatrix& a);

/// Basis of the null space {x : a x = 0}, one vector per free column, with
/// that column set to 1.
std::vector<RationalVector> solve_rational_kernel(const RationalMatrix& a);

}  // namespace inducibility
