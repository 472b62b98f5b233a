#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inducibility/labeled_graph.hpp"
#include "inducibility/rational.hpp"

namespace inducibility {

/// Weighted vertex-type model: k types with positive masses summing to one
/// and a symmetric matrix of edge probabilities, diagonal included.
///
/// Sampling t positions picks a type per position independently by mass;
/// every pair of positions is then adjacent independently with probability
/// weight(type_a, type_b). Two positions on the same type use the diagonal.
/// `Scalar` is `Rational` for exact models and `double` for approximate ones.
template <typename Scalar>
class StepModel {
 public:
  StepModel(Vector<Scalar> mass, Matrix<Scalar> weight)
      : mass_(std::move(mass)), weight_(std::move(weight)) {
    validate();
  }

  int types() const { return static_cast<int>(mass_.size()); }
  const Vector<Scalar>& mass() const { return mass_; }
  const Matrix<Scalar>& weight() const { return weight_; }

  /// True when every edge probability is 0 or 1.
  bool is_deterministic() const {
    return ((weight_.array() == Scalar(0)) || (weight_.array() == Scalar(1))).all();
  }

  friend bool operator==(const StepModel& a, const StepModel& b) {
    return a.types() == b.types() && a.mass_ == b.mass_ && a.weight_ == b.weight_;
  }

 private:
  void validate() const {
    const auto k = mass_.size();
    if (k < 1) throw std::invalid_argument("step model needs at least one type");
    if (weight_.rows() != k || weight_.cols() != k) {
      throw std::invalid_argument("step model weight matrix must be k x k");
    }
    if ((mass_.array() <= Scalar(0)).any()) throw std::invalid_argument("type masses must be positive");
    if constexpr (is_exact_v<Scalar>) {
      if (mass_.sum() != Scalar(1)) throw std::invalid_argument("type masses must sum to 1");
    } else {
      if (std::abs(mass_.sum() - 1.0) > 1e-12) throw std::invalid_argument("type masses must sum to 1");
    }
    if (weight_ != weight_.transpose()) throw std::invalid_argument("weight matrix must be symmetric");
    if ((weight_.array() < Scalar(0)).any() || (weight_.array() > Scalar(1)).any()) {
      throw std::invalid_argument("edge probabilities must lie in [0, 1]");
    }
  }

  Vector<Scalar> mass_;
  Matrix<Scalar> weight_;
};

using ExactModel = StepModel<Rational>;
using ApproxModel = StepModel<double>;

template <typename Scalar>
StepModel<Scalar> from_graph(const LabeledGraph& g) {
  const int n = g.order();
  Vector<Scalar> mass = Vector<Scalar>::Constant(n, Scalar(1) / Scalar(n));
  Matrix<Scalar> weight = g.adjacency().matrix().template cast<int>().template cast<Scalar>();
  return StepModel<Scalar>(std::move(mass), std::move(weight));
}

/// Limit of G(n, p).
template <typename Scalar>
StepModel<Scalar> bernoulli(const Scalar& p) {
  return StepModel<Scalar>(Vector<Scalar>::Constant(1, Scalar(1)), Matrix<Scalar>::Constant(1, 1, p));
}

/// Limit of the random bipartite graph G(n, n, p); no edges inside a side.
template <typename Scalar>
StepModel<Scalar> bipartite_random(const Scalar& p) {
  Matrix<Scalar> w(2, 2);
  w << Scalar(0), p, p, Scalar(0);
  return StepModel<Scalar>(Vector<Scalar>::Constant(2, Scalar(1) / Scalar(2)), std::move(w));
}

/// Block-diagonal union; part masses are normalized, cross-part weights are 0.
template <typename Scalar>
StepModel<Scalar> model_union(const std::vector<std::pair<StepModel<Scalar>, Scalar>>& parts) {
  if (parts.empty()) throw std::invalid_argument("model_union needs at least one part");
  Scalar total(0);
  int k = 0;
  for (const auto& [model, share] : parts) {
    if (!(share > Scalar(0))) throw std::invalid_argument("union masses must be positive");
    total += share;
    k += model.types();
  }
  Vector<Scalar> mass(k);
  Matrix<Scalar> weight = Matrix<Scalar>::Zero(k, k);
  int offset = 0;
  for (const auto& [model, share] : parts) {
    const int kp = model.types();
    mass.segment(offset, kp) = model.mass() * Scalar(share / total);
    weight.block(offset, offset, kp, kp) = model.weight();
    offset += kp;
  }
  if constexpr (!is_exact_v<Scalar>) mass /= mass.sum();
  return StepModel<Scalar>(std::move(mass), std::move(weight));
}

/// Independent product of two models with the XOR edge rule
/// w = w1 + w2 - 2 w1 w2. Type (i, j) is numbered i * k2 + j.
template <typename Scalar>
StepModel<Scalar> model_tensor(const StepModel<Scalar>& a, const StepModel<Scalar>& b) {
  const int ka = a.types(), kb = b.types();
  Vector<Scalar> mass(ka * kb);
  Matrix<Scalar> weight(ka * kb, ka * kb);
  for (int i = 0; i < ka * kb; ++i) {
    mass(i) = a.mass()(i / kb) * b.mass()(i % kb);
    for (int j = 0; j < ka * kb; ++j) {
      const Scalar& x = a.weight()(i / kb, j / kb);
      const Scalar& y = b.weight()(i % kb, j % kb);
      weight(i, j) = x + y - Scalar(2) * x * y;
    }
  }
  if constexpr (!is_exact_v<Scalar>) mass /= mass.sum();
  return StepModel<Scalar>(std::move(mass), std::move(weight));
}

template <typename Scalar>
StepModel<Scalar> model_complement(const StepModel<Scalar>& m) {
  Matrix<Scalar> w = Matrix<Scalar>::Constant(m.types(), m.types(), Scalar(1)) - m.weight();
  return StepModel<Scalar>(m.mass(), std::move(w));
}

inline ApproxModel to_approx(const ExactModel& m) {
  Vector<double> mass = m.mass().unaryExpr([](const Rational& q) { return to_double(q); });
  Matrix<double> weight = m.weight().unaryExpr([](const Rational& q) { return to_double(q); });
  mass /= mass.sum();
  return ApproxModel(std::move(mass), std::move(weight));
}

}  // namespace inducibility
