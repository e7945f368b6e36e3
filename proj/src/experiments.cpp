#include "ccm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "ccm/confmodel.hpp"
#include "ccm/errors.hpp"
#include "ccm/random.hpp"
#include "ccm/rate.hpp"

namespace ccm {

namespace {

double log_factorial(Count k) { return std::lgamma(static_cast<double>(k) + 1.0); }

void finish_estimate(ConnectivityEstimate& est) {
  const auto n = static_cast<double>(est.target.vertices());
  if (est.hits == 0) {
    est.log_probability = -std::numeric_limits<double>::infinity();
    est.rate = std::numeric_limits<double>::infinity();
    est.rate_std_error = std::numeric_limits<double>::infinity();
    return;
  }
  const double frac = static_cast<double>(est.hits) / static_cast<double>(est.replicates);
  est.log_probability = std::log(frac) + est.log_weight;
  est.rate = -est.log_probability / n;
  // delta method: sd(log f) ~ sqrt((1 - f) / hits)
  est.rate_std_error = std::sqrt((1.0 - frac) / static_cast<double>(est.hits)) / n;
}

struct Tally {
  std::uint64_t hits = 0;
};

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("CCM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double log_configuration_count(Count total_degree) {
  if (total_degree % 2 != 0) throw Error(ErrorCode::OddTotalDegree, "odd total degree");
  const auto half = total_degree / 2;
  return log_factorial(total_degree) - static_cast<double>(half) * std::log(2.0) -
         log_factorial(half);
}

double log_type_binomial(const TypeSequence& whole, const TypeSequence& part) {
  double out = 0.0;
  for (const auto& [k, c] : part.counts()) {
    const Count w = whole[k];
    out += log_factorial(w) - log_factorial(c) - log_factorial(w - c);
  }
  return out;
}

ConnectivityEstimate direct_connectivity(const TypeSequence& target, std::uint64_t replicates,
                                         std::uint64_t seed, unsigned threads) {
  struct Worker {
    ConfigurationSampler sampler;
    DisjointSets sets;
    std::uint64_t hits = 0;
  };
  const auto n = target.vertices();
  auto result = run_replicates(
      replicates, threads, [&] { return Worker{ConfigurationSampler(target), DisjointSets(n), 0}; },
      [&](Worker& w, std::uint64_t r) {
        const auto edges = w.sampler.sample_edges(derive_seed(seed, r));
        w.sets.reset(n);
        for (const auto& e : edges) w.sets.unite(e.u, e.v);
        if (n > 0 && w.sets.size_of(0) == n) ++w.hits;
      },
      [](Worker& into, const Worker& from) { into.hits += from.hits; });

  ConnectivityEstimate est;
  est.target = target;
  est.replicates = replicates;
  est.hits = result.hits;
  est.method = "direct";
  finish_estimate(est);
  return est;
}

ConnectivityEstimate embedded_connectivity(const DegreeDistribution& p, const TypeSequence& target,
                                           std::uint64_t replicates, std::uint64_t seed,
                                           unsigned threads) {
  const auto plan = build_embedding_untruncated(p, target.vertices());
  const auto& big = plan.N;
  if (!target.is_below(big)) {
    throw Error(ErrorCode::InvalidInput, "enlarged sequence does not dominate the target type");
  }
  const auto rest = difference(big, target);
  const auto wanted = static_cast<std::uint32_t>(target.vertices());
  const auto vertices = big.vertices();

  struct Worker {
    ConfigurationSampler sampler;
    DisjointSets sets;
    std::vector<std::uint32_t> per_degree_root;
    std::uint64_t hits = 0;
  };
  const auto max_degree = big.counts().rbegin()->first;
  auto result = run_replicates(
      replicates, threads,
      [&] { return Worker{ConfigurationSampler(big), DisjointSets(vertices), {}, 0}; },
      [&](Worker& w, std::uint64_t r) {
        const auto edges = w.sampler.sample_edges(derive_seed(seed, r));
        w.sets.reset(vertices);
        for (const auto& e : edges) w.sets.unite(e.u, e.v);
        // components with exactly `wanted` vertices; at most N / wanted of them
        std::map<std::uint32_t, std::vector<Count>> candidates;
        const auto& layout = w.sampler.layout();
        for (VertexId v = 0; v < vertices; ++v) {
          const auto root = w.sets.find(v);
          if (w.sets.size_of(root) != wanted) continue;
          auto& counts = candidates[root];
          if (counts.empty()) counts.assign(max_degree + 1, 0);
          ++counts[layout.degree(v)];
        }
        for (const auto& [root, counts] : candidates) {
          bool match = true;
          for (Degree k = 1; k <= max_degree && match; ++k) match = counts[k] == target[k];
          if (match) ++w.hits;
        }
      },
      [](Worker& into, const Worker& from) { into.hits += from.hits; });

  ConnectivityEstimate est;
  est.target = target;
  est.enlarged = big;
  est.replicates = replicates;
  est.hits = result.hits;
  est.method = "embedded";
  est.log_weight = log_configuration_count(big.total_degree()) - log_type_binomial(big, target) -
                   log_configuration_count(rest.total_degree()) -
                   log_configuration_count(target.total_degree());
  finish_estimate(est);
  return est;
}

double SimpleFraction::rate() const {
  return -std::log(fraction()) / static_cast<double>(type.vertices());
}

SimpleFraction simple_fraction(const TypeSequence& t, std::uint64_t replicates, std::uint64_t seed,
                               unsigned threads) {
  struct Worker {
    ConfigurationSampler sampler;
    std::vector<std::uint64_t> keys;
    std::uint64_t simple = 0;
  };
  auto result = run_replicates(
      replicates, threads, [&] { return Worker{ConfigurationSampler(t), {}, 0}; },
      [&](Worker& w, std::uint64_t r) {
        const auto edges = w.sampler.sample_edges(derive_seed(seed, r));
        w.keys.clear();
        for (const auto& e : edges) {
          if (e.u == e.v) return;
          const auto lo = std::min(e.u, e.v);
          const auto hi = std::max(e.u, e.v);
          w.keys.push_back((static_cast<std::uint64_t>(lo) << 32) | hi);
        }
        std::sort(w.keys.begin(), w.keys.end());
        if (std::adjacent_find(w.keys.begin(), w.keys.end()) == w.keys.end()) ++w.simple;
      },
      [](Worker& into, const Worker& from) { into.simple += from.simple; });
  return SimpleFraction{t, replicates, result.simple};
}

std::uint64_t GiantStatistics::in_window() const {
  std::uint64_t c = 0;
  for (bool b : within_window) c += b;
  return c;
}

GiantStatistics giant_statistics(const DegreeDistribution& p, double eps, Count n,
                                 std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  GiantStatistics stats;
  stats.plan = build_embedding(p, eps, n);
  const auto& big = stats.plan.N;
  const auto vertices = big.vertices();

  struct Worker {
    ConfigurationSampler sampler;
    DisjointSets sets;
    std::vector<std::map<Degree, Count>> counts;
    std::vector<Count> surplus;
  };
  auto result = run_replicates(
      samples, threads, [&] { return Worker{ConfigurationSampler(big), DisjointSets(vertices), {}, {}}; },
      [&](Worker& w, std::uint64_t r) {
        const auto edges = w.sampler.sample_edges(derive_seed(seed, r));
        w.sets.reset(vertices);
        for (const auto& e : edges) w.sets.unite(e.u, e.v);
        std::uint32_t giant_root = 0;
        std::uint32_t giant_size = 0;
        for (VertexId v = 0; v < vertices; ++v) {
          const auto root = w.sets.find(v);
          if (w.sets.size_of(root) > giant_size) {
            giant_size = w.sets.size_of(root);
            giant_root = root;
          }
        }
        std::map<Degree, Count> counts;
        const auto& layout = w.sampler.layout();
        for (VertexId v = 0; v < vertices; ++v) {
          if (w.sets.find(v) == giant_root) ++counts[layout.degree(v)];
        }
        Count giant_edges = 0;
        for (const auto& e : edges) giant_edges += w.sets.find(e.u) == giant_root;
        w.counts.push_back(std::move(counts));
        w.surplus.push_back(giant_edges + 1 >= giant_size ? giant_edges + 1 - giant_size : 0);
      },
      [](Worker& into, Worker& from) {
        into.counts.insert(into.counts.end(), from.counts.begin(), from.counts.end());
        into.surplus.insert(into.surplus.end(), from.surplus.begin(), from.surplus.end());
      });

  stats.giant_counts = std::move(result.counts);
  stats.giant_surplus = std::move(result.surplus);
  const auto nd = static_cast<double>(n);
  for (const auto& counts : stats.giant_counts) {
    bool ok = true;
    for (const auto& [k, pk] : p.weights()) {
      if (k > stats.plan.M) break;
      const double two_k = std::ldexp(1.0, static_cast<int>(k));
      const double lo = (1.0 - eps / (k * two_k * 2.0)) * pk * nd;
      const double hi = (1.0 - eps / (k * two_k * 8.0)) * pk * nd;
      auto it = counts.find(k);
      const double v = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      if (!(v > lo && v < hi)) ok = false;
    }
    stats.within_window.push_back(ok);
  }
  return stats;
}

CensusComparison census_vs_bp(const TypeSequence& type, unsigned radius, std::uint64_t samples,
                              std::uint64_t seed, std::uint64_t budget_per_sample, double min_mu,
                              unsigned threads) {
  CensusComparison cmp;
  cmp.type = type;
  cmp.radius = radius;
  cmp.samples = samples;
  cmp.p_hat = empirical_distribution(type);
  const auto sol = solve_beta(cmp.p_hat);
  cmp.beta = sol.beta;
  cmp.q = giant_degree_distribution(cmp.p_hat, sol.beta).q;

  struct Moments {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
  };
  struct Worker {
    std::map<std::string, Moments> moments;
    std::uint64_t attempts = 0;
  };
  auto result = run_replicates(
      samples, threads, [] { return Worker{}; },
      [&](Worker& w, std::uint64_t i) {
        const auto sample = sample_uniform_connected(type, derive_seed(seed, i), budget_per_sample);
        w.attempts += sample.attempts;
        for (const auto& [code, c] : empirical_census(sample.graph, radius).counts) {
          auto& m = w.moments[code];
          m.sum += c;
          m.sum_sq += c * c;
        }
      },
      [](Worker& into, const Worker& from) {
        into.attempts += from.attempts;
        for (const auto& [code, m] : from.moments) {
          into.moments[code].sum += m.sum;
          into.moments[code].sum_sq += m.sum_sq;
        }
      });
  cmp.attempts = result.attempts;

  const auto n = static_cast<double>(type.vertices());
  const auto s = static_cast<double>(samples);
  auto row_for = [&](const std::string& code, double mu) {
    CensusComparison::Row row{code, mu, 0.0, 0.0};
    if (auto it = result.moments.find(code); it != result.moments.end()) {
      const double mean = static_cast<double>(it->second.sum) / s;
      const double mean_sq = static_cast<double>(it->second.sum_sq) / s;
      const double var = samples > 1 ? std::max(0.0, mean_sq - mean * mean) * s / (s - 1.0) : 0.0;
      row.mean = mean / n;
      row.std_error = std::sqrt(var / s) / n;
    }
    return row;
  };
  for (const auto& t : enumerate_bp_trees(cmp.q, cmp.beta, radius, min_mu)) {
    cmp.rows.push_back(row_for(t.tree.code, t.probability));
  }
  cmp.rows.push_back(row_for(kNonTreeKey, 0.0));
  return cmp;
}

}  // namespace ccm
