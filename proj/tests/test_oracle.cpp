#include "doctest.h"

#include <cmath>

#include "ccm/confmodel.hpp"
#include "ccm/errors.hpp"
#include "ccm/oracle.hpp"
#include "ccm/random.hpp"

using namespace ccm;

namespace {

BigInt double_factorial_odd(Count l) {
  BigInt out = 1;
  for (Count k = 1; k + 1 <= l; k += 2) out *= k;
  return out;
}

}  // namespace

TEST_CASE("count_configurations") {
  CHECK(count_configurations(TypeSequence({{1, 2}})) == 1);
  CHECK(count_configurations(TypeSequence({{1, 4}})) == 3);
  CHECK(count_configurations(TypeSequence({{3, 4}})) == 10395);
  CHECK(count_configurations(TypeSequence({{2, 50}})) == double_factorial_odd(100));
}

TEST_CASE("enumerate_counts on the path type") {
  const auto r = enumerate_counts(TypeSequence({{1, 2}, {2, 1}}));
  CHECK(r.total == 3);
  CHECK(r.connected == 2);
  CHECK(r.simple == 2);
  CHECK(r.simple_connected == 2);
  CHECK(r.graphs == 1);
  CHECK(r.connected_graphs == 1);
}

TEST_CASE("enumerate_counts on four leaves and two degree-2 vertices") {
  const auto leaves = enumerate_counts(TypeSequence({{1, 4}}));
  CHECK(leaves.total == 3);
  CHECK(leaves.connected == 0);
  CHECK(leaves.simple == 3);
  CHECK(leaves.simple_connected == 0);
  CHECK(leaves.graphs == 3);

  const auto pair = enumerate_counts(TypeSequence({{2, 2}}));
  CHECK(pair.total == 3);
  CHECK(pair.connected == 2);
  CHECK(pair.simple == 0);
  CHECK(pair.simple_connected == 0);
}

TEST_CASE("no simple graph on two cubic vertices") {
  CHECK(count_graphs(TypeSequence({{3, 2}})) == 0);
  CHECK(count_graphs(TypeSequence({{3, 4}})) == 1);        // K4
  CHECK(count_graphs(TypeSequence({{2, 3}})) == 1);        // triangle
  CHECK(count_graphs(TypeSequence({{2, 4}})) == 3);        // labelled 4-cycles
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(enumerate_counts(TypeSequence({{1, 18}})), Error);
  CHECK_NOTHROW(enumerate_counts(TypeSequence({{1, 16}})));
}

TEST_CASE("helpers") {
  CHECK(type_binomial(TypeSequence({{1, 4}, {3, 2}}), TypeSequence({{1, 2}, {3, 2}})) == 6);
  CHECK(type_binomial(TypeSequence({{1, 2}}), TypeSequence({{3, 2}})) == 0);
  CHECK(stub_symmetry(TypeSequence({{2, 2}, {3, 2}})) == 144);
  CHECK(all_type_sequences(4).size() == 2 + 5);
  for (const auto& m : sub_type_sequences(TypeSequence({{1, 2}, {2, 1}}))) {
    CHECK(m.total_degree() % 2 == 0);
    CHECK(m.vertices() > 0);
  }
  CHECK(sub_type_sequences(TypeSequence({{1, 2}, {2, 1}})).size() == 3);
}

TEST_CASE("decomposition examples") {
  const TypeSequence path({{1, 2}, {2, 1}});
  const auto sides = decomposition_sides(path, {TypeSequence({{1, 2}})});
  CHECK(sides.configurations_lhs == 1);
  CHECK(sides.configurations_rhs == 1);
  CHECK(sides.holds());

  const auto whole = decomposition_sides(path, {path});
  CHECK(whole.configurations_lhs == 2);
  CHECK(whole.simple_lhs == 2);
  CHECK(whole.holds());
}

TEST_CASE("exhaustive identities for total degree <= 10") {
  for (const auto& t : all_type_sequences(10)) {
    const auto r = enumerate_counts(t);
    CHECK(r.total == double_factorial_odd(t.total_degree()));
    CHECK(r.graphs * stub_symmetry(t) == r.simple);
    CHECK(r.connected_graphs * stub_symmetry(t) == r.simple_connected);
    for (const auto& m : sub_type_sequences(t)) CHECK(decomposition_check(t, {m}));
  }
}

TEST_CASE("total count for total degree <= 12") {
  for (const auto& t : all_type_sequences(12)) {
    BigInt seen = 0;
    for_each_matching(t, [&](std::span<const StubId>) { ++seen; });
    CHECK(seen == double_factorial_odd(t.total_degree()));
  }
}

TEST_CASE("sampler agrees with the oracle within 3 standard errors") {
  for (const auto& t : {TypeSequence({{1, 2}, {3, 2}}), TypeSequence({{1, 4}, {2, 2}, {4, 1}}),
                        TypeSequence({{2, 3}, {3, 2}})}) {
    const auto exact = enumerate_counts(t);
    const double total = exact.total.convert_to<double>();
    const double p_conn = exact.connected.convert_to<double>() / total;
    const double p_simple = exact.simple.convert_to<double>() / total;
    const std::uint64_t draws = 40000;
    std::uint64_t connected = 0;
    std::uint64_t simple = 0;
    ConfigurationSampler sampler(t);
    for (std::uint64_t i = 0; i < draws; ++i) {
      const auto g = project(sampler.sample(derive_seed(11, i)));
      connected += components(g).count() == 1;
      simple += is_simple(g);
    }
    const auto within = [&](std::uint64_t hits, double p) {
      const double se = std::sqrt(p * (1 - p) / draws);
      return std::abs(static_cast<double>(hits) / draws - p) <= 3 * se + 1e-12;
    };
    CHECK(within(connected, p_conn));
    CHECK(within(simple, p_simple));
  }
}
