#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "unionprob/compensated_sum.hpp"
#include "unionprob/errors.hpp"
#include "unionprob/prob_core.hpp"

namespace unionprob::oracle {

inline constexpr std::size_t kMaxExhaustiveEvents = 20;

/*!
  Inclusion-exclusion evaluated literally: every non-empty subset S of the
  events contributes (-1)^(|S|-1) prod_{i in S} p_i. Subsets are visited by a
  plain binary counter over 2^n. Deliberately naive; this is ground truth for
  small n, not a production path.
*/
inline Probability subset_inclusion_exclusion(const EventProbabilities& events) {
  const std::size_t n = events.size();
  if (n > kMaxExhaustiveEvents) {
    throw SizeLimitError("exhaustive inclusion-exclusion is capped at " +
                             std::to_string(kMaxExhaustiveEvents) + " events, got " +
                             std::to_string(n),
                         kMaxExhaustiveEvents);
  }
  CompensatedSum<double> total;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    double product = 1.0;
    int size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        product *= events[i];
        ++size;
      }
    }
    total += (size % 2 == 1) ? product : -product;
  }
  // Rounding can leave the sum a few ulps outside [0, 1].
  return Probability(std::clamp(total.value(), 0.0, 1.0));
}

struct MonteCarloEstimate {
  double estimate = 0.0;
  std::uint64_t trials = 0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

// Trials are cut into fixed-size shards; shard k draws from mt19937_64 seeded
// with (seed ^ k). The result depends only on (events, trials, seed), never
// on how many workers run the shards.
inline constexpr std::uint64_t kTrialsPerShard = 1 << 16;

namespace detail {

// Top 53 bits of one mt19937_64 output, scaled into [0, 1).
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t run_shard(const EventProbabilities& events, std::uint64_t seed,
                               std::uint64_t shard, std::uint64_t trials) {
  std::mt19937_64 rng(seed ^ shard);
  std::uint64_t hits = 0;
  const std::size_t n = events.size();
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool any = false;
    // One variate per event every round, so the stream layout is fixed.
    for (std::size_t i = 0; i < n; ++i) {
      if (unit_uniform(rng) < events[i]) any = true;
    }
    hits += any ? 1 : 0;
  }
  return hits;
}

}  // namespace detail

/// Seeded Monte Carlo estimate of the union probability.
inline MonteCarloEstimate bernoulli_monte_carlo(const EventProbabilities& events,
                                                std::uint64_t trials, std::uint64_t seed,
                                                unsigned workers = 1) {
  if (trials == 0) throw InvalidInput("Monte Carlo needs at least one trial");
  const std::uint64_t shards = (trials + kTrialsPerShard - 1) / kTrialsPerShard;
  auto shard_trials = [&](std::uint64_t k) {
    return std::min(kTrialsPerShard, trials - k * kTrialsPerShard);
  };

  std::vector<std::uint64_t> hits(shards, 0);
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, shards));
  if (workers == 1) {
    for (std::uint64_t k = 0; k < shards; ++k) {
      hits[k] = detail::run_shard(events, seed, k, shard_trials(k));
    }
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t k = w; k < shards; k += workers) {
          hits[k] = detail::run_shard(events, seed, k, shard_trials(k));
        }
      });
    }
  }

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  MonteCarloEstimate out;
  out.trials = trials;
  out.seed = seed;
  out.estimate = static_cast<double>(total) / static_cast<double>(trials);
  out.standard_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

}  // namespace unionprob::oracle
