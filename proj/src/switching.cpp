#include "ccm/switching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

std::vector<StubId> released_stubs(const Configuration& c, const SwitchingMove& move) {
  if (move.broken_edges.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidMove, "a switching breaks an even number of edges");
  }
  std::vector<StubId> released;
  released.reserve(2 * move.broken_edges.size());
  std::vector<StubId> canonical;
  for (StubId s : move.broken_edges) {
    if (s >= c.stub_count()) throw Error(ErrorCode::InvalidMove, "edge reference out of range");
    released.push_back(s);
    released.push_back(c.partner(s));
    canonical.push_back(std::min(s, c.partner(s)));
  }
  std::sort(canonical.begin(), canonical.end());
  if (std::adjacent_find(canonical.begin(), canonical.end()) != canonical.end()) {
    throw Error(ErrorCode::InvalidMove, "broken edges are not distinct");
  }
  return released;
}

}  // namespace

Configuration apply_switching(const Configuration& c, const SwitchingMove& move) {
  const auto released = released_stubs(c, move);
  if (move.repairing.size() * 2 != released.size()) {
    throw Error(ErrorCode::InvalidMove, "repairing must pair all " +
                                            std::to_string(released.size()) + " half-edges");
  }
  std::vector<bool> used(released.size(), false);
  std::vector<StubId> partner(c.partner().begin(), c.partner().end());
  for (const auto& [a, b] : move.repairing) {
    if (a >= released.size() || b >= released.size() || a == b || used[a] || used[b]) {
      throw Error(ErrorCode::InvalidMove, "repairing is not a perfect matching");
    }
    used[a] = used[b] = true;
    partner[released[a]] = released[b];
    partner[released[b]] = released[a];
  }
  return rematch(c, std::move(partner));
}

SwitchingMove inverse_switching(const Configuration& c, const SwitchingMove& move) {
  const auto released = released_stubs(c, move);
  // break the new edges, one per repairing pair; index of a stub in the new list
  SwitchingMove inverse;
  std::vector<std::size_t> new_index(released.size());
  for (std::size_t j = 0; j < move.repairing.size(); ++j) {
    const auto [a, b] = move.repairing[j];
    inverse.broken_edges.push_back(released[a]);
    new_index[a] = 2 * j;
    new_index[b] = 2 * j + 1;
  }
  for (std::size_t j = 0; j < move.broken_edges.size(); ++j) {
    inverse.repairing.emplace_back(new_index[2 * j], new_index[2 * j + 1]);
  }
  return inverse;
}

std::vector<std::pair<StubId, StubId>> surplus_edges(const Configuration& c,
                                                     const ComponentView& view,
                                                     std::size_t component) {
  const auto& layout = c.layout();
  const auto n = layout.vertex_count();
  VertexId start = 0;
  while (start < n && view.component_of[start] != component) ++start;
  if (start == n) return {};

  std::vector<bool> seen(n, false);
  std::vector<bool> tree_stub(c.stub_count(), false);
  std::deque<VertexId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    const StubId first = layout.first_stub(v);
    for (StubId s = first; s < first + layout.degree(v); ++s) {
      const StubId t = c.partner(s);
      const VertexId w = layout.owner(t);
      if (seen[w]) continue;
      seen[w] = true;
      tree_stub[s] = tree_stub[t] = true;
      queue.push_back(w);
    }
  }

  std::vector<std::pair<StubId, StubId>> out;
  for (const auto& [s, t] : c.stub_pairs()) {
    if (view.component_of[layout.owner(s)] == component && !tree_stub[s]) out.emplace_back(s, t);
  }
  return out;
}

Configuration connect_repair(const Configuration& c) {
  const auto g = project(c);
  const auto view = components(g);
  if (view.count() <= 1) return c;

  const auto surplus = surplus_edges(c, view, view.giant);
  const std::size_t smaller = view.count() - 1;
  if (surplus.size() < smaller) {
    throw Error(ErrorCode::InsufficientSurplus,
                "giant has surplus " + std::to_string(surplus.size()) + " but " +
                    std::to_string(smaller) + " smaller components");
  }

  // first edge in stub order of every smaller component
  const auto& layout = c.layout();
  std::vector<StubId> first_edge(view.count(), 0);
  std::vector<bool> found(view.count(), false);
  for (const auto& [s, t] : c.stub_pairs()) {
    const auto id = view.component_of[layout.owner(s)];
    if (!found[id]) {
      found[id] = true;
      first_edge[id] = s;
    }
  }

  SwitchingMove move;
  std::size_t used = 0;
  for (std::size_t id = 0; id < view.count(); ++id) {
    if (id == view.giant) continue;
    const std::size_t base = move.broken_edges.size() * 2;
    move.broken_edges.push_back(surplus[used++].first);
    move.broken_edges.push_back(first_edge[id]);
    // released: base a, base+1 b, base+2 c, base+3 d
    move.repairing.emplace_back(base, base + 2);
    move.repairing.emplace_back(base + 1, base + 3);
  }
  return apply_switching(c, move);
}

}  // namespace ccm
