#pragma once

#include <map>
#include <span>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

/// Shortest dual walk from an inner face to the outer face, together with
/// the set of primal edges it crosses.
struct DualPath {
  int face = -1;
  std::vector<int> face_walk;   // faces visited, starting at `face`, ending at the outer face
  std::vector<int> crossed;     // primal edge indices, one per dual step
  EdgeMask crossed_mask = 0;
};

/// A vertex together with an incident face.
struct Corner {
  int vertex = -1;
  int face = -1;
  bool operator==(const Corner&) const = default;
  auto operator<=>(const Corner&) const = default;
};

/// Caches one deterministic dual path per face so that every correlator in
/// a session sees the same line of disorder for a given face.
class DualPathRegistry {
 public:
  explicit DualPathRegistry(const Graph& g);

  /// Path for an inner face (FaceIsOuter otherwise). Breadth-first shortest,
  /// ties broken by smallest face id, then smallest crossing-edge id.
  const DualPath& path(int face);

  /// Crossed edges of the symmetric difference of the per-face paths.
  /// Faces may repeat; the outer face contributes nothing.
  EdgeMask gamma_mask(std::span<const int> faces);

  /// Pairwise edge-disjointness across registered paths of distinct inner
  /// faces; required before corner correlators use them jointly.
  void require_edge_disjoint(std::span<const int> faces);

  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  std::vector<int> dist_;  // dual BFS distance to the outer face
  std::map<int, DualPath> cache_;
};

/// True iff every cycle of (V, omega) crosses `gamma` an even number of
/// times. Checked on the fundamental cycles of a spanning forest built by
/// scanning edges in the given order (crossing parity is linear on the
/// cycle space, so any forest decides it).
bool cycles_cross_evenly(const Graph& g, EdgeMask omega, EdgeMask gamma,
                         std::span<const int> edge_order = {});

/// Deletes all dual-path edges of the corners' faces, recomputes the outer
/// walk of the derived graph, and returns the corners in its induced
/// counterclockwise order (anchored at the lowest vertex label).
std::vector<Corner> corner_node_order(const Graph& g, std::span<const Corner> corners,
                                      DualPathRegistry& registry);

}  // namespace atlab
