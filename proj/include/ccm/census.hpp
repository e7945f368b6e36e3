#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccm/confmodel.hpp"
#include "ccm/degrees.hpp"
#include "ccm/errors.hpp"

namespace ccm {

/// Histogram key for vertices whose radius-r ball contains a cycle.
inline const std::string kNonTreeKey = "NON_TREE";

/// Canonical AHU encoding of a rooted tree truncated at depth `radius`.
///
/// A vertex is written "(" + sorted child codes + ")", so a leaf is "()" and
/// the star with two leaves is "(()())". Codes are equal iff the rooted trees
/// are isomorphic.
struct RootedTreeCode {
  std::string code;
  unsigned radius = 0;
  std::uint64_t leaves_at_radius = 0;  ///< vertices at depth exactly `radius`

  friend bool operator==(const RootedTreeCode&, const RootedTreeCode&) = default;
};

/// Builds a code from its string form, validating the parentheses.
RootedTreeCode make_tree_code(std::string code, unsigned radius);

/// Star with `children` leaves, as a depth-1 code.
RootedTreeCode star_code(unsigned children);

struct CensusHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  unsigned radius = 0;
};

/// Ball of radius r around v; nullopt when the induced subgraph is not a tree.
std::optional<RootedTreeCode> neighborhood_tree(const MultiGraph& g, VertexId v, unsigned r);

CensusHistogram empirical_census(const MultiGraph& g, unsigned r);

/// Probability that the first r generations of the unimodular branching
/// process (root offspring q, later offspring q*) conditioned on survival are
/// isomorphic to t:
///   mu(t) = P(B_r = t) (1 - beta^L(t)) / (1 - sum_k q_k beta^k).
/// P(B_r = t) multiplies offspring probabilities with the multinomial
/// k! / prod m_j! over repeated child codes.
double bp_tree_probability(const DegreeDistribution& q, double beta, const RootedTreeCode& t);

struct TreeProbability {
  RootedTreeCode tree;
  double probability = 0.0;
};

/// Every depth-r tree the process can produce with mu(t) >= min_prob, sorted
/// by decreasing probability. Throws TooLarge past `max_trees` candidates.
std::vector<TreeProbability> enumerate_bp_trees(const DegreeDistribution& q, double beta,
                                                unsigned r, double min_prob = 0.0,
                                                std::size_t max_trees = 2'000'000);

struct ConnectedSample {
  MultiGraph graph;
  std::uint64_t attempts = 0;
};

/// Exact uniform sample from the connected simple graphs of type t: draws
/// configurations with seeds derive_seed(seed, a) for a = 0, 1, ... and
/// accepts the first simple connected one. Throws BudgetExhausted.
ConnectedSample sample_uniform_connected(const TypeSequence& t, std::uint64_t seed,
                                         std::uint64_t budget);

struct NearMissReport {
  std::uint64_t attempts = 0;
  std::uint64_t min_distance = 0;
  double mean_distance = 0.0;
  std::map<std::uint64_t, std::uint64_t> distance_histogram;  ///< sum_k |v_k(giant) - n_k|
};

class GiantRejectionExhausted : public BudgetExhausted {
 public:
  explicit GiantRejectionExhausted(NearMissReport report);
  const NearMissReport& report() const noexcept { return report_; }

 private:
  NearMissReport report_;
};

struct GiantSample {
  MultiGraph graph;  ///< the accepted giant, vertices relabelled in ascending order
  TypeSequence target;
  std::uint64_t attempts = 0;
};

/// Samples configurations on the enlarged sequence N built for (p, eps, n)
/// and accepts the first whose giant is simple with type exactly `target`
/// (default: integerize(p, n)).
GiantSample giant_rejection_sample(const DegreeDistribution& p, double eps, Count n,
                                   std::uint64_t seed, std::uint64_t budget,
                                   std::optional<TypeSequence> target = std::nullopt);

}  // namespace ccm
