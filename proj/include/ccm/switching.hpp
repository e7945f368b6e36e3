#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ccm/confmodel.hpp"

namespace ccm {

/// Break 2i edges into 4i half-edges and pair them up again.
///
/// Edge j is named by either of its stubs. The released half-edges are
/// indexed 2j (the named stub) and 2j+1 (its current partner); `repairing`
/// is a perfect matching on those 4i indices.
struct SwitchingMove {
  std::vector<StubId> broken_edges;
  std::vector<std::pair<std::size_t, std::size_t>> repairing;
};

/// Degree preserving: only the stubs of the broken edges are re-paired.
Configuration apply_switching(const Configuration& c, const SwitchingMove& move);

/// Move that undoes `move` once it has been applied to `c`.
SwitchingMove inverse_switching(const Configuration& c, const SwitchingMove& move);

/// Spanning-forest complement of the component `component` (BFS from its
/// lowest vertex), as stub pairs in stub order. Loops and repeated edges are
/// always non-tree edges.
std::vector<std::pair<StubId, StubId>> surplus_edges(const Configuration& c,
                                                     const ComponentView& view,
                                                     std::size_t component);

/// Merge every smaller component into the giant: break one surplus edge
/// (a, b) of the giant per smaller component and one edge (c, d) of that
/// component, then pair a-c and b-d. The result is connected, has the same
/// type, and is simple whenever the input is.
Configuration connect_repair(const Configuration& c);

}  // namespace ccm
