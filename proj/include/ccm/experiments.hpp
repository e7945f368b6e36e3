#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "ccm/census.hpp"
#include "ccm/degrees.hpp"
#include "ccm/embedding.hpp"

namespace ccm {

/// CCM_THREADS if set and positive, otherwise the hardware concurrency.
unsigned default_thread_count();

/// Splits [0, count) into one contiguous block per thread. Each block gets a
/// fresh accumulator from `make`; `step(acc, index)` handles one replicate.
/// Accumulators are merged in block order with `merge(into, from)`.
template <typename Make, typename Step, typename Merge>
auto run_replicates(std::uint64_t count, unsigned threads, Make&& make, Step&& step, Merge&& merge) {
  threads = std::max(1u, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
  using Acc = decltype(make());
  std::vector<Acc> partial;
  partial.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) partial.push_back(make());
  auto block = [&](unsigned i) {
    const std::uint64_t lo = count * i / threads;
    const std::uint64_t hi = count * (i + 1) / threads;
    for (std::uint64_t r = lo; r < hi; ++r) step(partial[i], r);
  };
  if (threads == 1) {
    block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(block, i);
  }
  Acc out = std::move(partial[0]);
  for (unsigned i = 1; i < threads; ++i) merge(out, partial[i]);
  return out;
}

/// log((l - 1)!!) for even l.
double log_configuration_count(Count total_degree);

/// log prod_k C(N_k, n_k).
double log_type_binomial(const TypeSequence& whole, const TypeSequence& part);

/// Estimate of the probability that a uniform configuration with type
/// `target` is connected.
struct ConnectivityEstimate {
  TypeSequence target;
  TypeSequence enlarged;       ///< N; empty for the direct method
  std::uint64_t replicates = 0;
  std::uint64_t hits = 0;      ///< connected samples, or samples with a component of type target
  double log_weight = 0.0;     ///< log of the combinatorial factor applied to hits / replicates
  double log_probability = 0.0;
  double rate = 0.0;           ///< -log_probability / n
  double rate_std_error = 0.0;
  std::string method;
};

/// Plain Monte Carlo: fraction of configurations on `target` that are connected.
ConnectivityEstimate direct_connectivity(const TypeSequence& target, std::uint64_t replicates,
                                         std::uint64_t seed, unsigned threads);

/// Counts configurations on the enlarged N (built without truncation from p)
/// that contain a component of type exactly `target`, and converts through
///   E_N[#components of type n] |C_N| = C(N, n) |C^conn_n| |C_{N-n}|.
ConnectivityEstimate embedded_connectivity(const DegreeDistribution& p, const TypeSequence& target,
                                           std::uint64_t replicates, std::uint64_t seed,
                                           unsigned threads);

struct SimpleFraction {
  TypeSequence type;
  std::uint64_t replicates = 0;
  std::uint64_t simple = 0;
  double fraction() const { return static_cast<double>(simple) / static_cast<double>(replicates); }
  /// -log(fraction) / n
  double rate() const;
};

SimpleFraction simple_fraction(const TypeSequence& t, std::uint64_t replicates, std::uint64_t seed,
                               unsigned threads);

/// Giant degree counts of configuration-model samples on an embedding plan.
struct GiantStatistics {
  EmbeddingPlan plan;
  std::vector<std::map<Degree, Count>> giant_counts;  ///< one per sample
  std::vector<Count> giant_surplus;                   ///< |E| - (|V| - 1) per sample
  std::vector<bool> within_window;  ///< v_k / n in (1 - eps/(k 2^{k+1}), 1 - eps/(k 2^{k+3})) p_k, all k <= M
  std::uint64_t in_window() const;
};

GiantStatistics giant_statistics(const DegreeDistribution& p, double eps, Count n,
                                 std::uint64_t samples, std::uint64_t seed, unsigned threads);

/// Mean census over exact uniform connected samples next to mu(t).
struct CensusComparison {
  TypeSequence type;
  DegreeDistribution p_hat;   ///< empirical distribution of `type`; mu uses it
  double beta = 0.0;
  DegreeDistribution q;
  unsigned radius = 1;
  std::uint64_t samples = 0;
  std::uint64_t attempts = 0;
  struct Row {
    std::string code;
    double mu = 0.0;
    double mean = 0.0;       ///< mean over samples of (1/n) #{v : B_r(v) = t}
    double std_error = 0.0;
  };
  std::vector<Row> rows;     ///< every tree with mu >= min_mu, plus NON_TREE (mu = 0)
};

CensusComparison census_vs_bp(const TypeSequence& type, unsigned radius, std::uint64_t samples,
                              std::uint64_t seed, std::uint64_t budget_per_sample,
                              double min_mu, unsigned threads);

}  // namespace ccm
