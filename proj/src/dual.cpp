#include "atlab/dual.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace atlab {

DualPathRegistry::DualPathRegistry(const Graph& g) : g_(&g) {
  g.require_embedding();
  dist_.assign(g.face_count(), -1);
  std::deque<int> q{g.outer_face()};
  dist_[g.outer_face()] = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edge_faces(e);
      int other = a == f ? b : (b == f ? a : -1);
      if (other >= 0 && dist_[other] < 0) {
        dist_[other] = dist_[f] + 1;
        q.push_back(other);
      }
    }
  }
}

const DualPath& DualPathRegistry::path(int face) {
  const Graph& g = *g_;
  require(face >= 0 && face < g.face_count(), Errc::BadInput, "no such face");
  require(face != g.outer_face(), Errc::FaceIsOuter, "dual paths start at inner faces");
  auto it = cache_.find(face);
  if (it != cache_.end()) return it->second;

  DualPath p;
  p.face = face;
  p.face_walk.push_back(face);
  int cur = face;
  while (cur != g.outer_face()) {
    int best_face = -1, best_edge = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (p.crossed_mask >> e & 1u) continue;
      auto [a, b] = g.edge_faces(e);
      int other = a == cur ? b : (b == cur ? a : -1);
      if (other < 0 || dist_[other] != dist_[cur] - 1) continue;
      if (best_face < 0 || other < best_face || (other == best_face && e < best_edge)) {
        best_face = other;
        best_edge = e;
      }
    }
    require(best_face >= 0, Errc::BadInput, "dual BFS walk failed");
    p.face_walk.push_back(best_face);
    p.crossed.push_back(best_edge);
    p.crossed_mask |= EdgeMask{1} << best_edge;
    cur = best_face;
  }
  return cache_.emplace(face, std::move(p)).first->second;
}

EdgeMask DualPathRegistry::gamma_mask(std::span<const int> faces) {
  EdgeMask m = 0;
  for (int f : faces)
    if (f != g_->outer_face()) m ^= path(f).crossed_mask;
  return m;
}

void DualPathRegistry::require_edge_disjoint(std::span<const int> faces) {
  EdgeMask seen = 0;
  for (int f : faces) {
    if (f == g_->outer_face()) continue;
    EdgeMask m = path(f).crossed_mask;
    require((seen & m) == 0, Errc::DualPathsNotDisjoint,
            "dual paths of the requested faces share an edge");
    seen |= m;
  }
}

bool cycles_cross_evenly(const Graph& g, EdgeMask omega, EdgeMask gamma,
                         std::span<const int> edge_order) {
  std::vector<int> order(edge_order.begin(), edge_order.end());
  if (order.empty()) {
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> pot(g.vertex_count(), 0);  // gamma-crossing parity to the root
  // find with path compression, tracking parity
  std::function<int(int)> find = [&](int v) -> int {
    if (parent[v] == v) return v;
    int r = find(parent[v]);
    pot[v] ^= pot[parent[v]];
    parent[v] = r;
    return r;
  };
  for (int e : order) {
    if (!(omega >> e & 1u)) continue;
    int u = g.edge(e).u, v = g.edge(e).v;
    char w = (gamma >> e & 1u) ? 1 : 0;
    int ru = find(u), rv = find(v);
    if (ru == rv) {
      if ((pot[u] ^ pot[v] ^ w) != 0) return false;  // odd-crossing fundamental cycle
    } else {
      parent[ru] = rv;
      pot[ru] = pot[u] ^ pot[v] ^ w;
    }
  }
  return true;
}

std::vector<Corner> corner_node_order(const Graph& g, std::span<const Corner> corners,
                                      DualPathRegistry& registry) {
  g.require_embedding();
  std::set<int> vset, fset;
  std::vector<int> inner_faces;
  for (const Corner& c : corners) {
    require(c.vertex >= 0 && c.vertex < g.vertex_count() && c.face >= 0 &&
                c.face < g.face_count(),
            Errc::BadInput, "corner out of range");
    bool incident = false;
    for (const Dart& d : g.faces()[c.face])
      if (g.dart_tail(d) == c.vertex) incident = true;
    require(incident, Errc::BadInput, "corner face is not incident to its vertex");
    require(vset.insert(c.vertex).second, Errc::SetsNotDisjoint,
            "two corners share a vertex");
    if (c.face != g.outer_face()) {
      require(fset.insert(c.face).second, Errc::SetsNotDisjoint,
              "two corners share an inner face");
      inner_faces.push_back(c.face);
    }
  }
  registry.require_edge_disjoint(inner_faces);
  EdgeMask gamma = registry.gamma_mask(inner_faces);

  EdgeMask present = (g.edge_count() == 32 ? ~EdgeMask{0} : (EdgeMask{1} << g.edge_count()) - 1) &
                     ~gamma;
  TracedFaces traced = trace_faces_subset(g, present);

  // The derived outer face is the one the surviving old-outer darts landed
  // in; edge deletion only merges faces, so there is exactly one unless the
  // deletions disconnected the graph.
  std::set<int> candidates;
  for (const Dart& d : g.faces()[g.outer_face()])
    if (present >> d.edge & 1u) candidates.insert(traced.face_of_dart[d.edge * 2 + d.dir]);
  require(candidates.size() == 1, Errc::CornerVertexNotOnNewBoundary,
          "dual-path deletions leave no single outer walk");
  int new_outer = *candidates.begin();

  std::vector<int> walk;
  for (const Dart& d : traced.faces[new_outer]) walk.push_back(g.dart_tail(d));
  std::reverse(walk.begin(), walk.end());
  int anchor = 0;
  for (int i = 1; i < static_cast<int>(walk.size()); ++i)
    if (g.vertex_label(walk[i]) < g.vertex_label(walk[anchor])) anchor = i;

  std::map<int, const Corner*> by_vertex;
  for (const Corner& c : corners) by_vertex[c.vertex] = &c;
  std::vector<Corner> out;
  std::set<int> used;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
    int v = walk[(anchor + i) % walk.size()];
    if (!used.insert(v).second) continue;
    auto it = by_vertex.find(v);
    if (it != by_vertex.end()) out.push_back(*it->second);
  }
  require(out.size() == corners.size(), Errc::CornerVertexNotOnNewBoundary,
          "a corner vertex does not lie on the derived outer walk");
  return out;
}

}  // namespace atlab
