#include "doctest.h"

#include <cmath>

#include "ccm/census.hpp"
#include "ccm/experiments.hpp"
#include "ccm/oracle.hpp"

using namespace ccm;

namespace {

double exact_connected(const TypeSequence& t) {
  const auto r = enumerate_counts(t);
  return r.connected.convert_to<double>() / r.total.convert_to<double>();
}

double log_se(const ConnectivityEstimate& e) {
  return e.rate_std_error * static_cast<double>(e.target.vertices());
}

}  // namespace

TEST_CASE("log counts") {
  CHECK(log_configuration_count(0) == doctest::Approx(0.0));
  CHECK(log_configuration_count(12) == doctest::Approx(std::log(10395.0)));
  CHECK(log_type_binomial(TypeSequence({{1, 4}, {3, 2}}), TypeSequence({{1, 2}, {3, 2}})) ==
        doctest::Approx(std::log(6.0)));
}

TEST_CASE("run_replicates merges blocks independently of thread count") {
  auto sum = [](unsigned threads) {
    return run_replicates(
        1000, threads, [] { return std::uint64_t{0}; },
        [](std::uint64_t& acc, std::uint64_t i) { acc += i * i; },
        [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
  };
  CHECK(sum(1) == 332833500);
  CHECK(sum(4) == 332833500);
  CHECK(sum(2000) == 332833500);
}

TEST_CASE("direct estimator matches the oracle") {
  const TypeSequence t({{1, 2}, {4, 2}});
  const auto est = direct_connectivity(t, 100000, 3, 2);
  CHECK(est.method == "direct");
  CHECK(std::abs(est.log_probability - std::log(exact_connected(t))) <= 4 * log_se(est));
}

TEST_CASE("embedded estimator matches the oracle on small targets") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  for (const auto& t : {TypeSequence({{1, 2}, {4, 2}}), TypeSequence({{1, 4}, {4, 2}})}) {
    const auto est = embedded_connectivity(p, t, 100000, 8, 2);
    CHECK(est.method == "embedded");
    CHECK(t.is_below(est.enlarged));
    REQUIRE(est.hits > 100);
    CHECK(std::abs(est.log_probability - std::log(exact_connected(t))) <= 4 * log_se(est));
  }
}

TEST_CASE("direct and embedded estimators agree at n = 40") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  const auto t = integerize(p, 40);
  const auto direct = direct_connectivity(t, 100000, 1, 2);
  const auto embedded = embedded_connectivity(p, t, 100000, 2, 2);
  const double se = std::hypot(log_se(direct), log_se(embedded));
  CHECK(std::abs(direct.log_probability - embedded.log_probability) <= 4 * se);
}

TEST_CASE("estimates do not depend on the thread count") {
  const TypeSequence t({{1, 10}, {4, 10}});
  CHECK(direct_connectivity(t, 5000, 4, 1).hits == direct_connectivity(t, 5000, 4, 3).hits);
  CHECK(simple_fraction(t, 5000, 4, 1).simple == simple_fraction(t, 5000, 4, 3).simple);
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  CHECK(embedded_connectivity(p, t, 2000, 4, 1).hits == embedded_connectivity(p, t, 2000, 4, 3).hits);
}

TEST_CASE("simple fraction matches the oracle") {
  const TypeSequence t({{1, 4}, {3, 2}});
  const auto r = enumerate_counts(t);
  const double exact = r.simple.convert_to<double>() / r.total.convert_to<double>();
  const auto est = simple_fraction(t, 40000, 6, 2);
  const double se = std::sqrt(exact * (1 - exact) / 40000);
  CHECK(std::abs(est.fraction() - exact) <= 3 * se);
  CHECK(est.rate() == doctest::Approx(-std::log(est.fraction()) / 6));
}

TEST_CASE("giant statistics shape") {
  const DegreeDistribution p({{1, 0.5}, {4, 0.5}});
  const auto stats = giant_statistics(p, 0.1, 2000, 8, 1, 2);
  CHECK(stats.giant_counts.size() == 8);
  CHECK(stats.giant_surplus.size() == 8);
  CHECK(stats.within_window.size() == 8);
  CHECK(stats.in_window() <= 8);
  for (const auto& counts : stats.giant_counts) {
    for (const auto& [k, c] : counts) CHECK(c <= stats.plan.N[k]);
  }
}

TEST_CASE("census comparison at radius one accounts for every vertex") {
  // leaves always see a tree; a degree-4 vertex either sees the star or a cycle
  const TypeSequence t({{1, 6}, {4, 6}});
  const auto cmp = census_vs_bp(t, 1, 30, 1, 1'000'000, 0.0, 2);
  CHECK(cmp.samples == 30);
  std::map<std::string, CensusComparison::Row> rows;
  for (const auto& row : cmp.rows) rows[row.code] = row;
  REQUIRE(rows.count(kNonTreeKey) == 1);
  CHECK(rows.at(kNonTreeKey).mu == 0.0);
  CHECK(rows.at(star_code(1).code).mu == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at(star_code(4).code).mu == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at(star_code(1).code).mean == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows.at(star_code(1).code).std_error < 1e-12);
  CHECK(rows.at(star_code(4).code).mean + rows.at(kNonTreeKey).mean ==
        doctest::Approx(0.5).epsilon(1e-12));
}
