#include "doctest.h"

#include <cmath>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ccm/confmodel.hpp"
#include "ccm/errors.hpp"
#include "ccm/oracle.hpp"
#include "ccm/random.hpp"

using namespace ccm;

namespace {

/// Index of every matching of t in enumeration order, keyed by partner array.
std::map<std::vector<StubId>, std::size_t> matching_index(const TypeSequence& t) {
  std::map<std::vector<StubId>, std::size_t> index;
  for_each_matching(t, [&](std::span<const StubId> partner) {
    index.emplace(std::vector<StubId>(partner.begin(), partner.end()), index.size());
  });
  return index;
}

std::vector<std::uint64_t> matching_frequencies(const TypeSequence& t, std::uint64_t draws,
                                                std::uint64_t root) {
  const auto index = matching_index(t);
  std::vector<std::uint64_t> freq(index.size(), 0);
  ConfigurationSampler sampler(t);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto c = sampler.sample(derive_seed(root, i));
    const std::vector<StubId> key(c.partner().begin(), c.partner().end());
    ++freq.at(index.at(key));
  }
  return freq;
}

double chi_square(const std::vector<std::uint64_t>& freq, std::uint64_t draws) {
  const double expected = static_cast<double>(draws) / freq.size();
  double chi = 0.0;
  for (auto f : freq) chi += (f - expected) * (f - expected) / expected;
  return chi;
}

MultiGraph graph(std::size_t n, std::vector<Edge> edges) { return MultiGraph(n, std::move(edges)); }

}  // namespace

TEST_CASE("Rng bounded draws stay in range and are reproducible") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
  }
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("single matching for two leaves") {
  const TypeSequence t({{1, 2}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = sample_configuration(t, seed);
    CHECK(c.partner(0) == 1);
    CHECK(c.partner(1) == 0);
  }
}

TEST_CASE("odd total degree is rejected") {
  CHECK_THROWS_AS(TypeSequence({{1, 1}, {2, 1}}), Error);
}

TEST_CASE("three matchings of the path type are uniform (chi-square)") {
  const TypeSequence t({{1, 2}, {2, 1}});
  const auto freq = matching_frequencies(t, 30000, 5);
  REQUIRE(freq.size() == 3);
  for (auto f : freq) CHECK(f > 0);
  // df = 2: p = exp(-chi/2) > 0.001
  CHECK(std::exp(-chi_square(freq, 30000) / 2.0) > 0.001);
}

TEST_CASE("10395 matchings of four cubic vertices are uniform") {
  const TypeSequence t({{3, 4}});
  CHECK(count_configurations(t) == 10395);
  const std::uint64_t draws = 1'000'000;
  const auto freq = matching_frequencies(t, draws, 17);
  REQUIRE(freq.size() == 10395);
  const double df = 10394.0;
  // Wilson-Hilferty: (chi/df)^(1/3) is approximately normal
  const double z = (std::cbrt(chi_square(freq, draws) / df) - (1.0 - 2.0 / (9.0 * df))) /
                   std::sqrt(2.0 / (9.0 * df));
  CHECK(z < 3.09);   // upper tail p > 0.001
  CHECK(z > -3.09);
}

TEST_CASE("uniformity for every type with total degree <= 8 (TV <= 0.02)") {
  for (const auto& t : all_type_sequences(8)) {
    const std::uint64_t draws = 100000;
    const auto freq = matching_frequencies(t, draws, 99 + t.total_degree());
    const double uniform = 1.0 / freq.size();
    double tv = 0.0;
    for (auto f : freq) tv += std::abs(static_cast<double>(f) / draws - uniform);
    tv /= 2.0;
    CHECK(tv <= 0.02);
  }
}

TEST_CASE("sample_edges is the projection of sample for the same seed") {
  const TypeSequence t({{1, 5}, {2, 3}, {3, 3}});
  ConfigurationSampler sampler(t);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = sampler.sample(seed);
    CHECK(c == sample_configuration(t, seed));
    const auto g = project(c);
    const auto edges = sampler.sample_edges(seed);
    std::multiset<std::pair<VertexId, VertexId>> a;
    std::multiset<std::pair<VertexId, VertexId>> b;
    for (const auto& e : g.edges()) a.emplace(std::minmax(e.u, e.v));
    for (const auto& e : edges) b.emplace(std::minmax(e.u, e.v));
    CHECK(a == b);
  }
}

TEST_CASE("project: loops, paths and double edges") {
  // one degree-2 vertex paired with itself
  const Configuration loop(TypeSequence({{2, 1}}), {1, 0});
  const auto gl = project(loop);
  REQUIRE(gl.edge_count() == 1);
  CHECK(gl.edges()[0] == Edge{0, 0});
  CHECK(gl.degree(0) == 2);

  // stubs: v0 -> 0, v1 -> 1, v2 -> 2,3; pair (0,2), (1,3)
  const Configuration path(TypeSequence({{1, 2}, {2, 1}}), {2, 3, 0, 1});
  const auto gp = project(path);
  CHECK(gp.edges()[0] == Edge{0, 2});
  CHECK(gp.edges()[1] == Edge{1, 2});
  CHECK(is_simple(gp));

  // two degree-2 vertices, both stubs across
  const Configuration dbl(TypeSequence({{2, 2}}), {2, 3, 0, 1});
  const auto gd = project(dbl);
  CHECK(gd.edge_count() == 2);
  CHECK_FALSE(is_simple(gd));
}

TEST_CASE("Configuration validates the matching") {
  CHECK_THROWS_AS(Configuration(TypeSequence({{1, 2}}), {0, 1}), Error);
  CHECK_THROWS_AS(Configuration(TypeSequence({{1, 2}, {2, 1}}), {1, 0, 3}), Error);
  CHECK_THROWS_AS(Configuration(TypeSequence({{1, 2}, {2, 1}}), {1, 2, 3, 0}), Error);
}

TEST_CASE("is_simple") {
  CHECK(is_simple(graph(3, {{0, 2}, {1, 2}})));
  CHECK_FALSE(is_simple(graph(2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(is_simple(graph(1, {{0, 0}})));
}

TEST_CASE("components") {
  const auto path = components(graph(3, {{0, 2}, {1, 2}}));
  CHECK(path.count() == 1);
  CHECK(path.types[0] == TypeSequence({{1, 2}, {2, 1}}));

  const auto mixed = components(graph(3, {{0, 1}, {2, 2}}));
  CHECK(mixed.count() == 2);
  CHECK(mixed.giant == 0);
  CHECK(mixed.types[mixed.giant] == TypeSequence({{1, 2}}));
  CHECK(mixed.types[1] == TypeSequence({{2, 1}}));

  const auto tie = components(graph(4, {{2, 3}, {0, 1}}));
  CHECK(tie.count() == 2);
  CHECK(tie.giant == 0);
  CHECK(tie.component_of[0] == 0);
  CHECK(tie.component_of[2] == 1);
}

TEST_CASE("property: components partition the type, projection keeps degrees") {
  const std::vector<TypeSequence> types{TypeSequence({{1, 20}, {4, 20}}),
                                        TypeSequence({{1, 7}, {2, 9}, {3, 5}}),
                                        TypeSequence({{2, 30}}), TypeSequence({{1, 40}, {5, 8}})};
  for (const auto& t : types) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto g = project(sample_configuration(t, seed));
      std::size_t degree_sum = 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
      CHECK(degree_sum == t.total_degree());
      CHECK(degree_type(g) == t);
      const auto view = components(g);
      std::map<Degree, Count> sum;
      for (const auto& c : view.types) {
        for (const auto& [k, m] : c.counts()) sum[k] += m;
      }
      CHECK(TypeSequence(sum) == t);
      for (std::size_t i = 0; i < view.count(); ++i) {
        CHECK(view.vertex_counts[i] <= view.vertex_counts[view.giant]);
      }
    }
  }
}

TEST_CASE("edge list round trip is 1-indexed with loops as u u") {
  const auto g = graph(3, {{0, 2}, {1, 1}});
  std::ostringstream out;
  write_edge_list(g, out);
  CHECK(out.str() == "1 3\n2 2\n");
  std::istringstream in(out.str());
  const auto back = read_edge_list(in);
  CHECK(back.vertex_count() == 3);
  CHECK(back.edges()[0] == Edge{0, 2});
  CHECK(back.edges()[1] == Edge{1, 1});
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
}
