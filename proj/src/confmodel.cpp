#include "ccm/confmodel.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

StubLayout::StubLayout(const TypeSequence& type) {
  if (type.total_degree() > std::numeric_limits<StubId>::max()) {
    throw Error(ErrorCode::TooLarge, "more stubs than a 32-bit index can address");
  }
  degree_ = type.degrees();
  first_.resize(degree_.size());
  owner_.reserve(type.total_degree());
  for (VertexId v = 0; v < degree_.size(); ++v) {
    first_[v] = static_cast<StubId>(owner_.size());
    owner_.insert(owner_.end(), degree_[v], v);
  }
}

Configuration::Configuration(TypeSequence type, std::vector<StubId> partner)
    : Configuration(type, std::make_shared<const StubLayout>(type), std::move(partner)) {}

Configuration::Configuration(TypeSequence type, std::shared_ptr<const StubLayout> layout,
                             std::vector<StubId> partner)
    : type_(std::move(type)), layout_(std::move(layout)), partner_(std::move(partner)) {
  if (partner_.size() != layout_->stub_count()) {
    throw Error(ErrorCode::InvalidInput, "matching size " + std::to_string(partner_.size()) +
                                             " does not equal the stub count " +
                                             std::to_string(layout_->stub_count()));
  }
  for (StubId s = 0; s < partner_.size(); ++s) {
    const StubId t = partner_[s];
    if (t >= partner_.size() || t == s || partner_[t] != s) {
      throw Error(ErrorCode::InvalidInput,
                  "matching is not a fixed-point-free involution at stub " + std::to_string(s));
    }
  }
}

Configuration rematch(const Configuration& base, std::vector<StubId> partner) {
  return Configuration(base.type_, base.layout_, std::move(partner));
}

std::vector<std::pair<StubId, StubId>> Configuration::stub_pairs() const {
  std::vector<std::pair<StubId, StubId>> out;
  out.reserve(partner_.size() / 2);
  for (StubId s = 0; s < partner_.size(); ++s) {
    if (s < partner_[s]) out.emplace_back(s, partner_[s]);
  }
  return out;
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), offsets_(vertex_count + 1, 0) {
  for (const auto& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

void DisjointSets::reset(std::size_t n) {
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), 0u);
  size_.assign(n, 1);
}

std::uint32_t DisjointSets::find(std::uint32_t x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(std::uint32_t a, std::uint32_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
}

ConfigurationSampler::ConfigurationSampler(const TypeSequence& type)
    : type_(type), layout_(std::make_shared<const StubLayout>(type)) {
  if (type.total_degree() % 2 != 0) {
    throw Error(ErrorCode::OddTotalDegree, "cannot pair an odd number of stubs");
  }
  stubs_.resize(layout_->stub_count());
  edges_.resize(layout_->stub_count() / 2);
}

void ConfigurationSampler::shuffle(std::uint64_t seed) {
  std::iota(stubs_.begin(), stubs_.end(), 0u);
  Rng rng(seed);
  for (std::size_t i = stubs_.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(stubs_[i - 1], stubs_[j]);
  }
}

Configuration ConfigurationSampler::sample(std::uint64_t seed) {
  shuffle(seed);
  std::vector<StubId> partner(stubs_.size());
  for (std::size_t j = 0; j + 1 < stubs_.size(); j += 2) {
    partner[stubs_[j]] = stubs_[j + 1];
    partner[stubs_[j + 1]] = stubs_[j];
  }
  return Configuration(type_, layout_, std::move(partner));
}

std::span<const Edge> ConfigurationSampler::sample_edges(std::uint64_t seed) {
  shuffle(seed);
  const auto owners = layout_->owners();
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    edges_[j] = {owners[stubs_[2 * j]], owners[stubs_[2 * j + 1]]};
  }
  return edges_;
}

Configuration sample_configuration(const TypeSequence& type, std::uint64_t seed) {
  return ConfigurationSampler(type).sample(seed);
}

MultiGraph project(const Configuration& c) {
  std::vector<Edge> edges;
  edges.reserve(c.stub_count() / 2);
  const auto& layout = c.layout();
  for (const auto& [s, t] : c.stub_pairs()) edges.push_back({layout.owner(s), layout.owner(t)});
  return MultiGraph(layout.vertex_count(), std::move(edges));
}

bool is_simple(const MultiGraph& g) {
  std::vector<VertexId> mark(g.vertex_count(), std::numeric_limits<VertexId>::max());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (w == v || mark[w] == v) return false;
      mark[w] = v;
    }
  }
  return true;
}

ComponentView components(const MultiGraph& g) {
  const auto n = g.vertex_count();
  DisjointSets sets(n);
  for (const auto& e : g.edges()) sets.unite(e.u, e.v);

  ComponentView view;
  view.component_of.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::map<Degree, Count>> counts;
  for (VertexId v = 0; v < n; ++v) {
    const auto root = sets.find(v);
    if (id_of_root[root] == std::numeric_limits<std::uint32_t>::max()) {
      id_of_root[root] = static_cast<std::uint32_t>(counts.size());
      counts.emplace_back();
      view.vertex_counts.push_back(0);
      view.edge_counts.push_back(0);
    }
    const auto id = id_of_root[root];
    view.component_of[v] = id;
    ++counts[id][static_cast<Degree>(g.degree(v))];
    ++view.vertex_counts[id];
  }
  for (const auto& e : g.edges()) ++view.edge_counts[view.component_of[e.u]];
  view.types.reserve(counts.size());
  for (auto& c : counts) view.types.emplace_back(std::move(c));
  for (std::size_t i = 1; i < view.vertex_counts.size(); ++i) {
    if (view.vertex_counts[i] > view.vertex_counts[view.giant]) view.giant = i;
  }
  return view;
}

TypeSequence degree_type(const MultiGraph& g) {
  std::map<Degree, Count> counts;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++counts[static_cast<Degree>(g.degree(v))];
  return TypeSequence(std::move(counts));
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> relabel(g.vertex_count(), std::numeric_limits<VertexId>::max());
  for (VertexId i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const auto a = relabel[e.u];
    const auto b = relabel[e.v];
    if (a != std::numeric_limits<VertexId>::max() && b != std::numeric_limits<VertexId>::max()) {
      edges.push_back({a, b});
    }
  }
  return MultiGraph(vertices.size(), std::move(edges));
}

void write_edge_list(const MultiGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

MultiGraph read_edge_list(std::istream& in, std::size_t vertex_count) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || u < 1 || v < 1) {
      throw Error(ErrorCode::InvalidInput,
                  "edge list line " + std::to_string(line_no) + " is not a 1-indexed 'u v' pair");
    }
    edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
    vertex_count = std::max<std::size_t>(vertex_count, static_cast<std::size_t>(std::max(u, v)));
  }
  return MultiGraph(vertex_count, std::move(edges));
}

}  // namespace ccm
