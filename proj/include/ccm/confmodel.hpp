#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ccm/degrees.hpp"
#include "ccm/random.hpp"

namespace ccm {

using VertexId = std::uint32_t;
using StubId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Half-edge labelling for a type sequence: vertices are ordered by degree
/// class ascending and each vertex owns a consecutive block of stubs.
class StubLayout {
 public:
  explicit StubLayout(const TypeSequence& type);

  std::size_t vertex_count() const noexcept { return degree_.size(); }
  std::size_t stub_count() const noexcept { return owner_.size(); }
  VertexId owner(StubId s) const { return owner_[s]; }
  Degree degree(VertexId v) const { return degree_[v]; }
  StubId first_stub(VertexId v) const { return first_[v]; }
  std::span<const VertexId> owners() const noexcept { return owner_; }
  std::span<const Degree> degrees() const noexcept { return degree_; }

 private:
  std::vector<VertexId> owner_;
  std::vector<StubId> first_;
  std::vector<Degree> degree_;
};

/// A perfect matching on the stubs of a type sequence.
class Configuration {
 public:
  /// Validates that `partner` is a fixed-point-free involution on all stubs.
  Configuration(TypeSequence type, std::vector<StubId> partner);

  const TypeSequence& type() const noexcept { return type_; }
  const StubLayout& layout() const noexcept { return *layout_; }
  std::span<const StubId> partner() const noexcept { return partner_; }
  StubId partner(StubId s) const { return partner_[s]; }
  std::size_t stub_count() const noexcept { return partner_.size(); }

  /// Pairs (s, partner(s)) with s < partner(s), ordered by s.
  std::vector<std::pair<StubId, StubId>> stub_pairs() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.type_ == b.type_ && a.partner_ == b.partner_;
  }

 private:
  Configuration(TypeSequence type, std::shared_ptr<const StubLayout> layout,
                std::vector<StubId> partner);
  friend Configuration rematch(const Configuration& base, std::vector<StubId> partner);
  friend class ConfigurationSampler;

  TypeSequence type_;
  std::shared_ptr<const StubLayout> layout_;
  std::vector<StubId> partner_;
};

/// Same type and layout as `base`, new matching (validated).
Configuration rematch(const Configuration& base, std::vector<StubId> partner);

/// Undirected multigraph; loops contribute 2 to the degree of their vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Neighbour list with multiplicity; a loop at v lists v twice.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

struct ComponentView {
  std::vector<std::uint32_t> component_of;  ///< ids follow the lowest vertex of each component
  std::vector<TypeSequence> types;
  std::vector<Count> vertex_counts;
  std::vector<Count> edge_counts;
  std::size_t giant = 0;  ///< largest by vertex count, ties to the lowest id

  std::size_t count() const noexcept { return types.size(); }
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) { reset(n); }
  void reset(std::size_t n);
  std::uint32_t find(std::uint32_t x) noexcept;
  void unite(std::uint32_t a, std::uint32_t b) noexcept;
  std::uint32_t size_of(std::uint32_t x) noexcept { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

/// Reusable sampler. `sample` and `sample_edges` consume the same random
/// stream, so for a given seed the edges are the projection of the sample.
class ConfigurationSampler {
 public:
  explicit ConfigurationSampler(const TypeSequence& type);

  Configuration sample(std::uint64_t seed);
  std::span<const Edge> sample_edges(std::uint64_t seed);

  const TypeSequence& type() const noexcept { return type_; }
  const StubLayout& layout() const noexcept { return *layout_; }

 private:
  void shuffle(std::uint64_t seed);

  TypeSequence type_;
  std::shared_ptr<const StubLayout> layout_;
  std::vector<StubId> stubs_;
  std::vector<Edge> edges_;
};

/// Uniform over the (l-1)!! matchings: Fisher-Yates on the stub array, then
/// stubs 2j and 2j+1 are paired.
Configuration sample_configuration(const TypeSequence& type, std::uint64_t seed);

MultiGraph project(const Configuration& c);
bool is_simple(const MultiGraph& g);
ComponentView components(const MultiGraph& g);

/// Type sequence of each vertex's degree, read off the multigraph.
TypeSequence degree_type(const MultiGraph& g);

/// Induced subgraph on `vertices`, relabelled 0.. in the given order.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices);

/// One "u v" line per edge, 1-indexed; loops written as "u u".
void write_edge_list(const MultiGraph& g, std::ostream& out);
/// Vertex count is the largest index seen unless `vertex_count` is larger.
MultiGraph read_edge_list(std::istream& in, std::size_t vertex_count = 0);

}  // namespace ccm
