#include "ccm/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string_view>

#include "ccm/embedding.hpp"
#include "ccm/errors.hpp"
#include "ccm/rate.hpp"

namespace ccm {

namespace {

std::vector<std::string_view> child_codes(std::string_view code) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < code.size(); ++i) {
    if (code[i] == '(') {
      if (depth++ == 0) start = i;
    } else if (--depth == 0) {
      out.push_back(code.substr(start, i - start + 1));
    }
  }
  return out;
}

std::uint64_t nodes_at_depth(std::string_view code, unsigned depth) {
  if (depth == 0) return 1;
  std::uint64_t total = 0;
  for (auto child : child_codes(code)) total += nodes_at_depth(child, depth - 1);
  return total;
}

double log_factorial(std::size_t k) { return std::lgamma(static_cast<double>(k) + 1.0); }

/// log(k! / prod m_j!) for the runs of equal entries in a sorted list.
template <typename Range>
double log_multinomial(const Range& sorted_items) {
  double out = log_factorial(sorted_items.size());
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted_items.size(); ++i) {
    if (i < sorted_items.size() && sorted_items[i] == sorted_items[i - 1]) {
      ++run;
    } else {
      out -= log_factorial(run);
      run = 1;
    }
  }
  return out;
}

class TreeProbabilityModel {
 public:
  TreeProbabilityModel(const DegreeDistribution& q, double beta, unsigned radius)
      : q_(q), q_star_(unimodular_offspring(q)), beta_(beta), radius_(radius) {
    if (radius == 0) throw Error(ErrorCode::DomainError, "radius must be at least 1");
    survival_ = 0.0;
    for (const auto& [k, qk] : q.weights()) survival_ += qk * -std::expm1(k * std::log(beta));
  }

  double offspring(unsigned depth, std::size_t k) const {
    return depth == 0 ? q_[static_cast<Degree>(k)] : q_star_[static_cast<Degree>(k)];
  }

  /// P(first radius - depth generations below a depth-`depth` vertex match `code`).
  double unconditioned(std::string_view code, unsigned depth) const {
    if (depth == radius_) return code == "()" ? 1.0 : 0.0;
    auto children = child_codes(code);
    std::sort(children.begin(), children.end());
    const double pk = offspring(depth, children.size());
    if (pk == 0.0) return 0.0;
    double prob = pk * std::exp(log_multinomial(children));
    for (auto child : children) {
      prob *= unconditioned(child, depth + 1);
      if (prob == 0.0) break;
    }
    return prob;
  }

  double conditioned(double unconditioned_prob, std::uint64_t leaves) const {
    const double alive = -std::expm1(static_cast<double>(leaves) * std::log(beta_));
    return unconditioned_prob * alive / survival_;
  }

  const SizeBiasedDistribution& q_star() const { return q_star_; }

 private:
  const DegreeDistribution& q_;
  SizeBiasedDistribution q_star_;
  double beta_;
  unsigned radius_;
  double survival_;
};

struct SubtreeType {
  std::string code;
  double prob = 0.0;
};

/// Calls visit(indices) for every non-decreasing index tuple of length k over [0, n).
template <typename Visit>
void for_each_multiset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k, 0);
  if (k == 0) {
    visit(idx);
    return;
  }
  if (n == 0) return;
  while (true) {
    visit(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) return;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < k; ++j) idx[j] = next;
  }
}

double multiset_count(std::size_t n, std::size_t k) {
  // C(n + k - 1, k)
  if (n == 0) return k == 0 ? 1.0 : 0.0;
  return std::exp(std::lgamma(static_cast<double>(n + k)) - std::lgamma(static_cast<double>(k) + 1.0) -
                  std::lgamma(static_cast<double>(n)));
}

/// Explores radius-r balls, reusing scratch arrays across roots.
class BallExplorer {
 public:
  explicit BallExplorer(const MultiGraph& g)
      : g_(g), depth_(g.vertex_count(), kUnset), stamp_(g.vertex_count(), 0) {}

  std::optional<RootedTreeCode> explore(VertexId root, unsigned r) {
    ++round_;
    ball_.clear();
    ball_.push_back(root);
    visit(root, 0);
    for (std::size_t head = 0; head < ball_.size(); ++head) {
      const VertexId u = ball_[head];
      if (depth_[u] == r) continue;
      for (VertexId w : g_.neighbors(u)) {
        if (stamp_[w] != round_) {
          visit(w, depth_[u] + 1);
          ball_.push_back(w);
        }
      }
    }

    std::size_t incidences = 0;
    for (VertexId u : ball_) {
      for (VertexId w : g_.neighbors(u)) incidences += stamp_[w] == round_;
    }
    if (incidences / 2 + 1 != ball_.size()) return std::nullopt;

    codes_.resize(ball_.size());
    index_.resize(g_.vertex_count());
    for (std::size_t i = 0; i < ball_.size(); ++i) index_[ball_[i]] = i;
    std::uint64_t leaves = 0;
    std::vector<std::string> children;
    for (std::size_t i = ball_.size(); i-- > 0;) {
      const VertexId u = ball_[i];
      if (depth_[u] == r) ++leaves;
      children.clear();
      if (depth_[u] < r) {
        for (VertexId w : g_.neighbors(u)) {
          if (depth_[w] == depth_[u] + 1) children.push_back(std::move(codes_[index_[w]]));
        }
      }
      std::sort(children.begin(), children.end());
      std::string code = "(";
      for (const auto& c : children) code += c;
      code += ')';
      codes_[i] = std::move(code);
    }
    return RootedTreeCode{std::move(codes_[0]), r, leaves};
  }

 private:
  static constexpr unsigned kUnset = std::numeric_limits<unsigned>::max();

  void visit(VertexId v, unsigned depth) {
    stamp_[v] = round_;
    depth_[v] = depth;
  }

  const MultiGraph& g_;
  std::vector<unsigned> depth_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
  std::vector<VertexId> ball_;
  std::vector<std::string> codes_;
  std::vector<std::size_t> index_;
};

}  // namespace

RootedTreeCode make_tree_code(std::string code, unsigned radius) {
  if (radius == 0) throw Error(ErrorCode::DomainError, "radius must be at least 1");
  int depth = 0;
  int deepest = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '(') {
      deepest = std::max(deepest, ++depth);
    } else if (code[i] == ')') {
      if (--depth < 0) break;
    } else {
      depth = -1;
      break;
    }
    if (depth == 0 && i + 1 != code.size()) {
      depth = -1;
      break;
    }
  }
  if (code.empty() || depth != 0) {
    throw Error(ErrorCode::InvalidInput, "'" + code + "' is not a parenthesised tree code");
  }
  if (static_cast<unsigned>(deepest) > radius + 1) {
    throw Error(ErrorCode::InvalidInput, "'" + code + "' is deeper than radius " + std::to_string(radius));
  }
  const auto leaves = nodes_at_depth(code, radius);
  return RootedTreeCode{std::move(code), radius, leaves};
}

RootedTreeCode star_code(unsigned children) {
  std::string code = "(";
  for (unsigned i = 0; i < children; ++i) code += "()";
  code += ')';
  return RootedTreeCode{std::move(code), 1, children};
}

std::optional<RootedTreeCode> neighborhood_tree(const MultiGraph& g, VertexId v, unsigned r) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::InvalidInput, "root vertex out of range");
  return BallExplorer(g).explore(v, r);
}

CensusHistogram empirical_census(const MultiGraph& g, unsigned r) {
  CensusHistogram hist;
  hist.radius = r;
  BallExplorer explorer(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto tree = explorer.explore(v, r);
    ++hist.counts[tree ? tree->code : kNonTreeKey];
    ++hist.total;
  }
  return hist;
}

double bp_tree_probability(const DegreeDistribution& q, double beta, const RootedTreeCode& t) {
  const TreeProbabilityModel model(q, beta, t.radius);
  return model.conditioned(model.unconditioned(t.code, 0), t.leaves_at_radius);
}

std::vector<TreeProbability> enumerate_bp_trees(const DegreeDistribution& q, double beta,
                                                unsigned r, double min_prob,
                                                std::size_t max_trees) {
  const TreeProbabilityModel model(q, beta, r);
  double budget = static_cast<double>(max_trees);

  auto combine = [&](const std::vector<SubtreeType>& below, std::size_t k, double pk,
                     auto&& emit) {
    budget -= multiset_count(below.size(), k);
    if (budget < 0) {
      throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_trees) +
                                           " candidate trees; raise the cap or lower r");
    }
    for_each_multiset(below.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::string code = "(";
      double prob = pk * std::exp(log_multinomial(idx));
      for (auto i : idx) {
        code += below[i].code;
        prob *= below[i].prob;
      }
      code += ')';
      emit(std::move(code), prob);
    });
  };

  // types hanging below depth d, built from the leaves up
  std::vector<SubtreeType> level{{"()", 1.0}};
  for (unsigned d = r - 1; d >= 1; --d) {
    std::vector<SubtreeType> next;
    for (const auto& [k, pk] : model.q_star().weights()) {
      combine(level, k, pk, [&](std::string code, double prob) {
        if (prob > 0.0) next.push_back({std::move(code), prob});
      });
    }
    std::sort(next.begin(), next.end(),
              [](const SubtreeType& a, const SubtreeType& b) { return a.code < b.code; });
    level = std::move(next);
  }

  std::vector<TreeProbability> out;
  for (const auto& [k, qk] : q.weights()) {
    combine(level, k, qk, [&](std::string code, double prob) {
      const auto leaves = nodes_at_depth(code, r);
      const double mu = model.conditioned(prob, leaves);
      if (mu > 0.0 && mu >= min_prob) {
        out.push_back({RootedTreeCode{std::move(code), r, leaves}, mu});
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const TreeProbability& a, const TreeProbability& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.tree.code < b.tree.code;
  });
  return out;
}

ConnectedSample sample_uniform_connected(const TypeSequence& t, std::uint64_t seed,
                                         std::uint64_t budget) {
  ConfigurationSampler sampler(t);
  const auto n = sampler.layout().vertex_count();
  DisjointSets sets(n);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    const auto edges = sampler.sample_edges(derive_seed(seed, attempt));
    sets.reset(n);
    for (const auto& e : edges) sets.unite(e.u, e.v);
    if (n == 0 || sets.size_of(0) != n) continue;
    MultiGraph g(n, {edges.begin(), edges.end()});
    if (is_simple(g)) return {std::move(g), attempt + 1};
  }
  throw BudgetExhausted(budget, "no simple connected configuration in " +
                                    std::to_string(budget) + " attempts");
}

GiantRejectionExhausted::GiantRejectionExhausted(NearMissReport report)
    : BudgetExhausted(report.attempts, "giant never matched the target type in " +
                                           std::to_string(report.attempts) + " attempts"),
      report_(std::move(report)) {}

GiantSample giant_rejection_sample(const DegreeDistribution& p, double eps, Count n,
                                   std::uint64_t seed, std::uint64_t budget,
                                   std::optional<TypeSequence> target) {
  const auto plan = build_embedding(p, eps, n);
  const TypeSequence goal = target ? *target : integerize(p, n);
  NearMissReport report;
  report.min_distance = std::numeric_limits<std::uint64_t>::max();
  if (budget == 0) {
    report.min_distance = 0;
    throw GiantRejectionExhausted(report);
  }

  ConfigurationSampler sampler(plan.N);
  const auto& layout = sampler.layout();
  const auto vertices = layout.vertex_count();
  DisjointSets sets(vertices);
  double distance_sum = 0.0;
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    const auto edges = sampler.sample_edges(derive_seed(seed, attempt));
    sets.reset(vertices);
    for (const auto& e : edges) sets.unite(e.u, e.v);

    // largest component, ties to the one containing the lowest vertex
    std::uint32_t giant_root = 0;
    std::uint32_t giant_size = 0;
    for (VertexId v = 0; v < vertices; ++v) {
      const auto root = sets.find(v);
      if (sets.size_of(root) > giant_size) {
        giant_size = sets.size_of(root);
        giant_root = root;
      }
    }
    std::map<Degree, Count> counts;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < vertices; ++v) {
      if (sets.find(v) == giant_root) {
        ++counts[layout.degree(v)];
        members.push_back(v);
      }
    }
    const TypeSequence giant_type(counts);

    std::uint64_t distance = 0;
    std::map<Degree, Count> all = giant_type.counts();
    for (const auto& [k, c] : goal.counts()) all[k];
    for (const auto& [k, c] : all) {
      const auto a = giant_type[k];
      const auto b = goal[k];
      distance += a > b ? a - b : b - a;
    }
    if (distance == 0) {
      MultiGraph whole(vertices, {edges.begin(), edges.end()});
      auto giant = induced_subgraph(whole, members);
      if (is_simple(giant)) return {std::move(giant), goal, attempt + 1};
    }
    ++report.distance_histogram[distance];
    report.min_distance = std::min(report.min_distance, distance);
    distance_sum += static_cast<double>(distance);
    report.attempts = attempt + 1;
  }
  report.mean_distance = distance_sum / static_cast<double>(report.attempts);
  throw GiantRejectionExhausted(std::move(report));
}

}  // namespace ccm
