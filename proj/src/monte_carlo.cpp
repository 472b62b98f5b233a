#include "inducibility/monte_carlo.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "inducibility/iso_table.hpp"
#include "parallel.hpp"

namespace inducibility {

namespace {

std::mt19937_64 shard_engine(std::uint64_t seed, int shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  return std::mt19937_64(seq);
}

std::uint64_t shard_samples(std::uint64_t samples, int shard) {
  return samples / kSampleShards + (static_cast<std::uint64_t>(shard) < samples % kSampleShards ? 1 : 0);
}

void check_arguments(int t, std::uint64_t samples, int max_t) {
  if (t < 2 || t > max_t) throw std::invalid_argument("sample order must lie in 2.." + std::to_string(max_t));
  if (samples < 1) throw std::invalid_argument("need at least one sample");
}

double binomial_error(double v, std::uint64_t n) { return std::sqrt(v * (1 - v) / static_cast<double>(n)); }

// sampler(rng) draws one sample of t positions and returns its labeled mask.
template <typename Sampler>
ProfileEstimate estimate(int t, std::uint64_t samples, std::uint64_t seed, Sampler sampler) {
  check_arguments(t, samples, kMaxOrder);
  const IsoTable& table = iso_table(t);
  std::vector<std::vector<std::uint64_t>> counts(kSampleShards, std::vector<std::uint64_t>(table.size(), 0));
  detail::run_shards(kSampleShards, [&](int shard) {
    auto rng = shard_engine(seed, shard);
    auto& local = counts[shard];
    const std::uint64_t n = shard_samples(samples, shard);
    for (std::uint64_t i = 0; i < n; ++i) ++local[table.type_of(sampler(rng))];
  });

  ProfileEstimate out;
  out.t = t;
  out.samples = samples;
  out.seed = seed;
  out.hits = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>::Zero(table.size());
  for (const auto& local : counts) {
    for (int i = 0; i < table.size(); ++i) out.hits(i) += local[i];
  }
  out.values.resize(table.size());
  out.standard_error.resize(table.size());
  for (int i = 0; i < table.size(); ++i) {
    out.values(i) = static_cast<double>(out.hits(i)) / static_cast<double>(samples);
    out.standard_error(i) = binomial_error(out.values(i), samples);
  }
  return out;
}

}  // namespace

ProfileEstimate monte_carlo_profile(const LabeledGraph& g, int t, std::uint64_t samples, std::uint64_t seed) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("cannot sample from an empty graph");
  const AdjacencyMatrix& adj = g.adjacency();
  return estimate(t, samples, seed, [&, n, t](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::array<int, kMaxOrder> v{};
    for (int i = 0; i < t; ++i) v[i] = pick(rng);
    LabeledMask mask = 0;
    int slot = 0;
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j, ++slot) {
        if (adj(v[i], v[j])) mask |= LabeledMask{1} << slot;
      }
    }
    return mask;
  });
}

ProfileEstimate monte_carlo_profile(const ApproxModel& model, int t, std::uint64_t samples, std::uint64_t seed) {
  const std::vector<double> mass(model.mass().data(), model.mass().data() + model.types());
  const Matrix<double>& w = model.weight();
  return estimate(t, samples, seed, [&, t](std::mt19937_64& rng) {
    std::discrete_distribution<int> pick(mass.begin(), mass.end());
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::array<int, kMaxOrder> v{};
    for (int i = 0; i < t; ++i) v[i] = pick(rng);
    LabeledMask mask = 0;
    int slot = 0;
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j, ++slot) {
        if (coin(rng) < w(v[i], v[j])) mask |= LabeledMask{1} << slot;
      }
    }
    return mask;
  });
}

ProfileEstimate monte_carlo_profile(const ExactModel& model, int t, std::uint64_t samples, std::uint64_t seed) {
  return monte_carlo_profile(to_approx(model), t, samples, seed);
}

MassEstimate monte_carlo_clique_anticlique(const LabeledGraph& g, int t, std::uint64_t samples,
                                           std::uint64_t seed) {
  constexpr int kMaxMonochromatic = 8;
  check_arguments(t, samples, kMaxMonochromatic);
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("cannot sample from an empty graph");
  const AdjacencyMatrix& adj = g.adjacency();
  std::vector<std::uint64_t> hits(kSampleShards, 0);
  detail::run_shards(kSampleShards, [&](int shard) {
    auto rng = shard_engine(seed, shard);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::array<int, kMaxMonochromatic> v{};
    const std::uint64_t count = shard_samples(samples, shard);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (int i = 0; i < t; ++i) v[i] = pick(rng);
      const bool first = adj(v[0], v[1]) != 0;
      bool uniform = true;
      for (int i = 0; i < t && uniform; ++i) {
        for (int j = i + 1; j < t; ++j) {
          if ((adj(v[i], v[j]) != 0) != first) {
            uniform = false;
            break;
          }
        }
      }
      if (uniform) ++hits[shard];
    }
  });
  MassEstimate out;
  for (auto h : hits) out.hits += h;
  out.samples = samples;
  out.seed = seed;
  out.value = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.standard_error = binomial_error(out.value, samples);
  return out;
}

}  // namespace inducibility
