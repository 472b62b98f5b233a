#include "inducibility/linalg.hpp"

namespace inducibility {

std::vector<Eigen::Index> row_reduce(RationalMatrix& a) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(row).swap(a.row(pivot));
    const Rational inv = Rational(1) / a(row, col);
    for (Eigen::Index c = col; c < cols; ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c) {
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RationalVector> solve_rational_kernel(const RationalMatrix& a) {
  RationalMatrix reduced = a;
  const auto pivots = row_reduce(reduced);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x = RationalVector::Zero(cols);
    x(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = -reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace inducibility
