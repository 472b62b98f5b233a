#pragma once

#include <cstdint>

#include "inducibility/labeled_graph.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/step_model.hpp"

namespace inducibility {

/// Sampling is split into this many shards, each with its own generator
/// seeded from (seed, shard), so results do not depend on the thread count.
inline constexpr int kSampleShards = 16;

/// Repetitive profile estimated from independent samples of t positions.
/// `hits(i)` counts samples that induced type i; `values` is hits/samples
/// and `standard_error` the binomial standard error sqrt(v (1 - v) / samples).
struct ProfileEstimate {
  int t = 0;
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1> hits;
  Vector<double> values;
  Vector<double> standard_error;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Positions are drawn uniformly with replacement; a repeated vertex is
/// adjacent to itself exactly when it carries a loop.
ProfileEstimate monte_carlo_profile(const LabeledGraph& g, int t, std::uint64_t samples, std::uint64_t seed);
ProfileEstimate monte_carlo_profile(const ApproxModel& model, int t, std::uint64_t samples, std::uint64_t seed);
ProfileEstimate monte_carlo_profile(const ExactModel& model, int t, std::uint64_t samples, std::uint64_t seed);

struct MassEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double value = 0;
  double standard_error = 0;
};

/// Probability that t positions sampled with replacement induce a clique or
/// an anticlique (K_t + A_t). Works for t up to 8, beyond the type tables.
MassEstimate monte_carlo_clique_anticlique(const LabeledGraph& g, int t, std::uint64_t samples,
                                           std::uint64_t seed);

}  // namespace inducibility
