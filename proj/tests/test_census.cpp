#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "ccm/census.hpp"
#include "ccm/confmodel.hpp"
#include "ccm/embedding.hpp"
#include "ccm/errors.hpp"
#include "ccm/oracle.hpp"
#include "ccm/random.hpp"
#include "ccm/rate.hpp"

using namespace ccm;

namespace {

MultiGraph graph(std::size_t n, std::vector<Edge> edges) { return MultiGraph(n, std::move(edges)); }

std::multiset<std::pair<VertexId, VertexId>> edge_set(const MultiGraph& g) {
  std::multiset<std::pair<VertexId, VertexId>> out;
  for (const auto& e : g.edges()) out.emplace(std::minmax(e.u, e.v));
  return out;
}

MultiGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return graph(n, edges);
}

// Draws from a finite distribution given as (value, weight) pairs.
struct Sampler {
  std::vector<std::pair<Degree, double>> cdf;
  explicit Sampler(const std::map<Degree, double>& w) {
    double acc = 0.0;
    for (auto [k, x] : w) cdf.emplace_back(k, acc += x);
  }
  Degree operator()(Rng& rng) const {
    const double u = rng.uniform() * cdf.back().second;
    for (auto [k, c] : cdf) {
      if (u < c) return k;
    }
    return cdf.back().first;
  }
};

// Lineage below a depth-r vertex survives: run until extinct or large.
bool lineage_survives(const Sampler& offspring, Rng& rng) {
  std::uint64_t alive = 1;
  while (alive > 0 && alive < 60) {
    std::uint64_t next = 0;
    for (std::uint64_t i = 0; i < alive; ++i) next += offspring(rng);
    alive = next;
  }
  return alive > 0;
}

}  // namespace

TEST_CASE("tree codes") {
  CHECK(star_code(0).code == "()");
  CHECK(star_code(2).code == "(()())");
  CHECK(star_code(2).leaves_at_radius == 2);
  CHECK(make_tree_code("((())())", 2).leaves_at_radius == 1);
  CHECK_THROWS_AS(make_tree_code("(()", 1), Error);
  CHECK_THROWS_AS(make_tree_code(")(", 1), Error);
  CHECK_THROWS_AS(make_tree_code("()", 0), Error);
  CHECK_THROWS_AS(make_tree_code("((()))", 1), Error);
}

TEST_CASE("neighbourhoods of small graphs") {
  const auto edge = graph(2, {{0, 1}});
  CHECK(neighborhood_tree(edge, 0, 1)->code == star_code(1).code);
  CHECK(neighborhood_tree(edge, 1, 1)->code == star_code(1).code);

  const auto path = graph(3, {{0, 2}, {1, 2}});
  CHECK(neighborhood_tree(path, 2, 1)->code == star_code(2).code);
  CHECK(neighborhood_tree(path, 0, 2)->code == "((()))");

  const auto triangle = cycle(3);
  for (VertexId v = 0; v < 3; ++v) CHECK_FALSE(neighborhood_tree(triangle, v, 2).has_value());
}

TEST_CASE("empirical census") {
  const auto path = graph(3, {{0, 2}, {1, 2}});
  const auto h = empirical_census(path, 1);
  CHECK(h.total == 3);
  CHECK(h.counts.at(star_code(1).code) == 2);
  CHECK(h.counts.at(star_code(2).code) == 1);

  const auto doubled = graph(6, {{0, 2}, {1, 2}, {3, 5}, {4, 5}});
  for (unsigned r : {1u, 2u}) {
    const auto one = empirical_census(path, r);
    const auto two = empirical_census(doubled, r);
    CHECK(two.total == 2 * one.total);
    for (const auto& [code, count] : one.counts) CHECK(two.counts.at(code) == 2 * count);
  }

  const auto c7 = empirical_census(cycle(7), 1);
  CHECK(c7.counts.size() == 1);
  CHECK(c7.counts.at(star_code(2).code) == 7);
  CHECK(empirical_census(cycle(3), 2).counts.at(kNonTreeKey) == 3);
}

TEST_CASE("mu of stars is p") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  const double beta = solve_beta(p).beta;
  const auto q = giant_degree_distribution(p, beta).q;
  CHECK(bp_tree_probability(q, beta, star_code(1)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(bp_tree_probability(q, beta, star_code(4)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(bp_tree_probability(q, beta, star_code(2)) == 0.0);

  const auto r1 = enumerate_bp_trees(q, beta, 1);
  double total = 0.0;
  for (const auto& t : r1) total += t.probability;
  CHECK(std::abs(total - 1.0) < 1e-9);

  const DegreeDistribution p2({{1, 0.3}, {2, 0.2}, {3, 0.4}, {5, 0.1}});
  const double b2 = solve_beta(p2).beta;
  const auto q2 = giant_degree_distribution(p2, b2).q;
  for (auto [k, w] : p2.weights()) {
    CHECK(std::abs(bp_tree_probability(q2, b2, star_code(k)) - w) < 1e-9);
  }
}

TEST_CASE("extinct slices have no mass") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  const double beta = solve_beta(p).beta;
  const auto q = giant_degree_distribution(p, beta).q;
  CHECK(bp_tree_probability(q, beta, make_tree_code("(())", 2)) == 0.0);
}

TEST_CASE("depth-2 mu sums to one") {
  const DegreeDistribution p({{1, 0.4}, {2, 0.1}, {3, 0.5}});
  const double beta = solve_beta(p).beta;
  const auto q = giant_degree_distribution(p, beta).q;
  double total = 0.0;
  for (const auto& t : enumerate_bp_trees(q, beta, 2)) total += t.probability;
  CHECK(total >= 1.0 - 1e-6);
  CHECK(total <= 1.0 + 1e-9);
}

TEST_CASE("mu matches a simulated branching process conditioned on survival") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  const double beta = solve_beta(p).beta;
  const auto q = giant_degree_distribution(p, beta).q;
  std::map<Degree, double> star_weights;
  double norm = 0.0;
  for (auto [k, w] : q.weights()) norm += k * w;
  for (auto [k, w] : q.weights()) star_weights[k - 1] += k * w / norm;
  const Sampler root(q.weights());
  const Sampler later(star_weights);

  const unsigned r = 2;
  Rng rng(314);
  std::map<std::string, std::uint64_t> seen;
  std::uint64_t survived = 0;
  const std::uint64_t trials = 200000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    bool alive = false;
    std::function<std::string(unsigned)> grow = [&](unsigned depth) -> std::string {
      if (depth == r) {
        alive = lineage_survives(later, rng) || alive;
        return "()";
      }
      const Degree children = depth == 0 ? root(rng) : later(rng);
      std::vector<std::string> codes;
      for (Degree c = 0; c < children; ++c) codes.push_back(grow(depth + 1));
      std::sort(codes.begin(), codes.end());
      std::string out = "(";
      for (const auto& c : codes) out += c;
      return out + ")";
    };
    const auto code = grow(0);
    if (!alive) continue;
    ++survived;
    ++seen[code];
  }
  for (const auto& t : enumerate_bp_trees(q, beta, r, 0.005)) {
    const double freq = static_cast<double>(seen[t.tree.code]) / survived;
    const double se = std::sqrt(t.probability * (1 - t.probability) / survived);
    CHECK_MESSAGE(std::abs(freq - t.probability) <= 4 * se, t.tree.code);
  }
}

TEST_CASE("uniform connected sampler on tiny types") {
  const TypeSequence path({{1, 2}, {2, 1}});
  std::uint64_t first_try = 0;
  const std::uint64_t runs = 3000;
  for (std::uint64_t s = 0; s < runs; ++s) {
    const auto sample = sample_uniform_connected(path, s, 100);
    CHECK(edge_set(sample.graph) == edge_set(graph(3, {{0, 2}, {1, 2}})));
    first_try += sample.attempts == 1;
  }
  const double se = std::sqrt(2.0 / 9.0 / runs);
  CHECK(std::abs(static_cast<double>(first_try) / runs - 2.0 / 3.0) <= 3 * se);

  CHECK_THROWS_AS(sample_uniform_connected(TypeSequence({{1, 4}}), 1, 500), BudgetExhausted);

  const TypeSequence triangle({{2, 3}});
  const auto exact = enumerate_counts(triangle);
  const double accept = exact.simple_connected.convert_to<double>() / exact.total.convert_to<double>();
  std::uint64_t attempts = 0;
  for (std::uint64_t s = 0; s < runs; ++s) {
    const auto sample = sample_uniform_connected(triangle, s, 1000);
    CHECK(is_simple(sample.graph));
    CHECK(components(sample.graph).count() == 1);
    attempts += sample.attempts;
  }
  // attempts are geometric with mean 1 / accept
  const double mean = static_cast<double>(attempts) / runs;
  const double sd = std::sqrt((1 - accept) / (accept * accept) / runs);
  CHECK(std::abs(mean - 1.0 / accept) <= 3 * sd);
}

TEST_CASE("giant rejection sampler") {
  const DegreeDistribution p({{1, 0.4}, {3, 0.6}});
  try {
    giant_rejection_sample(p, 0.04, 10, 1, 0);
    FAIL("expected exhaustion");
  } catch (const GiantRejectionExhausted& e) {
    CHECK(e.report().attempts == 0);
  }

  // pilot: most frequent simple giant type on the enlarged sequence
  const DegreeDistribution p4({{1, 0.5}, {4, 0.5}});
  const auto plan = build_embedding(p4, 0.1, 20);
  ConfigurationSampler sampler(plan.N);
  std::map<TypeSequence, int> pilot;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const auto g = project(sampler.sample(derive_seed(9, s)));
    const auto view = components(g);
    std::vector<VertexId> giant;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (view.component_of[v] == view.giant) giant.push_back(v);
    }
    if (is_simple(induced_subgraph(g, giant))) ++pilot[view.types[view.giant]];
  }
  REQUIRE_FALSE(pilot.empty());
  const auto best = std::max_element(pilot.begin(), pilot.end(),
                                     [](auto& a, auto& b) { return a.second < b.second; })->first;
  const auto accepted = giant_rejection_sample(p4, 0.1, 20, 5, 20000, best);
  CHECK(accepted.target == best);
  CHECK(degree_type(accepted.graph) == best);
  CHECK(is_simple(accepted.graph));
  CHECK(components(accepted.graph).count() == 1);
}

TEST_CASE("giant rejection and uniform connected samplers agree on a tiny type") {
  const DegreeDistribution p({{1, 0.4}, {3, 0.6}});
  const TypeSequence target = integerize(p, 10);
  const unsigned r = 2;
  const std::uint64_t draws = 2000;
  std::map<std::string, std::vector<double>> a;
  std::map<std::string, std::vector<double>> b;
  for (std::uint64_t s = 0; s < draws; ++s) {
    const auto x = giant_rejection_sample(p, 0.04, 10, derive_seed(21, s), 100000);
    const auto y = sample_uniform_connected(target, derive_seed(22, s), 100000);
    for (const auto& [code, c] : empirical_census(x.graph, r).counts) {
      a[code].resize(draws, 0.0);
      a[code][s] = static_cast<double>(c) / target.vertices();
    }
    for (const auto& [code, c] : empirical_census(y.graph, r).counts) {
      b[code].resize(draws, 0.0);
      b[code][s] = static_cast<double>(c) / target.vertices();
    }
  }
  auto stats = [&](const std::vector<double>& v) {
    double m = 0.0;
    double m2 = 0.0;
    for (double x : v) {
      m += x;
      m2 += x * x;
    }
    m /= draws;
    return std::pair{m, std::max(0.0, m2 / draws - m * m) / draws};
  };
  for (auto& [code, v] : a) {
    auto& w = b[code];
    v.resize(draws, 0.0);
    w.resize(draws, 0.0);
    const auto [ma, va] = stats(v);
    const auto [mb, vb] = stats(w);
    CHECK_MESSAGE(std::abs(ma - mb) <= 3.5 * std::sqrt(va + vb) + 1e-12, code);
  }
}
