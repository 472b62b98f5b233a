#include "inducibility/nesting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "inducibility/errors.hpp"
#include "inducibility/linalg.hpp"

namespace inducibility {

CompositionOperator::CompositionOperator(const LabeledGraph& base, int t) : t_(t), s_(base.order()) {
  if (t < 2 || t > kMaxOrder) throw std::invalid_argument("composition order must lie in 2..5");
  if (base.has_loops()) throw std::invalid_argument("nested blow-ups need a loopless base graph");
  if (s_ < 2) throw std::invalid_argument("nested blow-ups need a base graph with at least 2 vertices");

  const int m = std::min(s_, t_);
  const auto p_top = labeled_induced_profile(base, m);
  std::vector<LabeledProfile<Rational>> p(m + 1);
  for (int l = 1; l <= m; ++l) p[l] = project_prefix(p_top, l);

  const Rational scale = Rational(1) / Rational(pow(Integer(s_), t_));
  const auto& partitions = set_partitions(t_);
  terms_.resize(labeled_count(t_));
  for (LabeledMask h = 0; h < labeled_count(t_); ++h) {
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      const SetPartition& lambda = partitions[i];
      const int l = lambda.size();
      const std::int64_t ff = falling_factorial(s_, l);
      if (ff == 0 || !is_admissible(lambda, h)) continue;
      Rational coefficient = Rational(ff) * scale * p[l].values(quotient_mask(lambda, h));
      if (coefficient == 0) continue;
      terms_[h].push_back(Term{static_cast<int>(i), std::move(coefficient)});
    }
  }
}

LabeledProfile<Rational> CompositionOperator::apply(const LabeledProfile<Rational>& r) const {
  if (r.t != t_) throw std::invalid_argument("profile order does not match the composition operator");
  const auto& partitions = set_partitions(t_);
  const std::size_t n = labeled_count(t_);
  // Marginal of r on the within-part slots of each partition.
  std::vector<RationalVector> marginal(partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    marginal[i] = RationalVector::Zero(n);
    const LabeledMask within = partitions[i].within;
    for (std::size_t h = 0; h < n; ++h) {
      if (r.values(h) != 0) marginal[i](h & within) += r.values(h);
    }
  }
  LabeledProfile<Rational> out{t_, Flavor::Repetitive, RationalVector::Zero(n)};
  for (std::size_t h = 0; h < n; ++h) {
    for (const Term& term : terms_[h]) {
      const LabeledMask within = partitions[term.partition].within;
      const Rational& mass = marginal[term.partition](h & within);
      if (mass != 0) out.values(h) += term.coefficient * mass;
    }
  }
  return out;
}

RationalMatrix CompositionOperator::labeled_matrix() const {
  const auto& partitions = set_partitions(t_);
  const std::size_t n = labeled_count(t_);
  RationalMatrix f = RationalMatrix::Zero(n, n);
  for (std::size_t h = 0; h < n; ++h) {
    for (const Term& term : terms_[h]) {
      const LabeledMask within = partitions[term.partition].within;
      const LabeledMask cross = full_mask(t_) & ~within;
      const LabeledMask fixed = static_cast<LabeledMask>(h) & within;
      for (LabeledMask sub = cross;; sub = (sub - 1) & cross) {
        f(h, fixed | sub) += term.coefficient;
        if (sub == 0) break;
      }
    }
  }
  return f;
}

RationalMatrix CompositionOperator::type_matrix() const {
  const IsoTable& table = iso_table(t_);
  const auto& partitions = set_partitions(t_);
  const int k = table.size();
  RationalMatrix F = RationalMatrix::Zero(k, k);
  std::vector<std::int64_t> per_type(k);
  for (int i = 0; i < k; ++i) {
    const LabeledMask h = table[i].representative;
    for (const Term& term : terms_[h]) {
      std::fill(per_type.begin(), per_type.end(), 0);
      const LabeledMask within = partitions[term.partition].within;
      const LabeledMask cross = full_mask(t_) & ~within;
      const LabeledMask fixed = h & within;
      for (LabeledMask sub = cross;; sub = (sub - 1) & cross) {
        ++per_type[table.type_of(fixed | sub)];
        if (sub == 0) break;
      }
      for (int j = 0; j < k; ++j) {
        if (per_type[j] != 0) F(i, j) += term.coefficient * Rational(per_type[j]);
      }
    }
    for (int j = 0; j < k; ++j) {
      if (F(i, j) != 0) F(i, j) *= Rational(table[i].orbit_size, table[j].orbit_size);
    }
  }
  return F;
}

LabeledProfile<Rational> compose_profile(const LabeledGraph& base, const LabeledProfile<Rational>& r) {
  return CompositionOperator(base, r.t).apply(r);
}

namespace {

std::string describe(const LabeledGraph& g) { return graph6_encode(g); }

}  // namespace

TransitionMatrix transition_matrix(const LabeledGraph& base, int t) {
  CompositionOperator op(base, t);
  return TransitionMatrix{t, describe(base), iso_table(t).names(), op.type_matrix()};
}

NestedProfile stationary_profile(const LabeledGraph& base, int t) {
  CompositionOperator op(base, t);
  RationalMatrix shifted = op.type_matrix();
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= 1;
  const auto kernel = solve_rational_kernel(shifted);
  if (kernel.size() != 1) {
    throw DegenerateKernel("composition matrix has a " + std::to_string(kernel.size()) +
                           "-dimensional fixed space; no unique nested profile");
  }
  RationalVector q = kernel.front();
  const Rational total = q.sum();
  if (total == 0) throw DegenerateKernel("fixed vector sums to zero");
  q /= total;
  if ((q.array() < Rational(0)).any()) throw DegenerateKernel("fixed vector leaves the probability simplex");

  NestedProfile out;
  out.t = t;
  out.base = describe(base);
  out.types = ProfileVector<Rational>{t, Flavor::Repetitive, std::move(q)};
  out.labeled = to_labeled(out.types);
  return out;
}

SpectralProfile<Rational> nested_spectral(const LabeledGraph& base, int t) {
  return fourier(stationary_profile(base, t).labeled);
}

LabeledProfile<Rational> iterate_profile(const LabeledGraph& base, int t, int n) {
  if (n < 1) throw std::invalid_argument("nesting depth must be at least 1");
  auto r = labeled_repetitive_profile(from_graph<Rational>(base), t);
  if (n == 1) return r;
  CompositionOperator op(base, t);
  for (int i = 1; i < n; ++i) r = op.apply(r);
  return r;
}

}  // namespace inducibility
