#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlab/errors.hpp"
#include "atlab/rational.hpp"

namespace atlab {

using EdgeMask = std::uint32_t;
using VertexMask = std::uint32_t;

constexpr int kMaxVertices = 30;
constexpr int kMaxEdges = 30;

/// A directed side of an edge: dir 0 runs u->v, dir 1 runs v->u.
struct Dart {
  int edge = -1;
  int dir = 0;
  bool operator==(const Dart&) const = default;
};

/// Input description of a graph. Vertex and edge ids are arbitrary distinct
/// nonnegative labels; the rotation (counterclockwise edge order per vertex)
/// and the outer-face walk are optional and must be given together.
struct GraphSpec {
  std::vector<int> vertices;
  struct EdgeIn {
    int id = -1;
    int u = -1, v = -1;  // vertex labels
    std::optional<Rational> x, y;
    std::optional<double> J, U;
  };
  std::vector<EdgeIn> edges;
  std::optional<std::map<int, std::vector<int>>> rotation;  // vertex label -> ccw edge ids
  std::optional<std::vector<int>> outer_walk;               // edge ids of the boundary walk
};

/// Immutable simple graph, optionally carrying a combinatorial planar
/// embedding (rotation system with derived faces and a designated outer
/// face). All operations after construction are const and thread-safe.
class Graph {
 public:
  struct Edge {
    int u = -1, v = -1;  // internal vertex indices
  };

  static Graph build(const GraphSpec& spec);

  int vertex_count() const { return static_cast<int>(edges_of_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return edges_of_[v]; }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  bool connected() const { return connected_; }
  bool has_embedding() const { return !faces_.empty(); }

  // --- embedding-dependent machinery -------------------------------------
  int face_count() const { return static_cast<int>(faces_.size()); }
  int outer_face() const { return outer_face_; }
  /// Counterclockwise incident-edge order per vertex.
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  /// Face walks as dart sequences; inner faces run counterclockwise.
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  /// Face on the left of the dart (the face whose walk contains it).
  int face_left_of(const Dart& d) const { return face_of_dart_[d.edge * 2 + d.dir]; }
  /// The two faces adjacent to an edge.
  std::pair<int, int> edge_faces(int e) const {
    return {face_of_dart_[e * 2], face_of_dart_[e * 2 + 1]};
  }
  /// Counterclockwise order of the outer-face vertices, first occurrence
  /// per vertex, anchored at the lowest-label boundary vertex.
  const std::vector<int>& boundary_order() const;
  bool on_boundary(int v) const;

  int dart_head(const Dart& d) const { return d.dir == 0 ? edges_[d.edge].v : edges_[d.edge].u; }
  int dart_tail(const Dart& d) const { return d.dir == 0 ? edges_[d.edge].u : edges_[d.edge].v; }

  // --- label translation ---------------------------------------------------
  int vertex_index(int label) const;
  int vertex_label(int idx) const { return vertex_labels_[idx]; }
  int edge_index(int label) const;
  int edge_label(int idx) const { return edge_labels_[idx]; }
  const std::vector<int>& vertex_labels() const { return vertex_labels_; }
  const std::vector<int>& edge_labels() const { return edge_labels_; }

  VertexMask ends_mask(int e) const { return (VertexMask{1} << edges_[e].u) | (VertexMask{1} << edges_[e].v); }

  void require_embedding() const {
    require(has_embedding(), Errc::NonPlanarEmbedding, "operation needs a planar embedding");
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> edges_of_;        // incident edge indices per vertex
  std::vector<std::vector<int>> rotation_;        // ccw incident edges per vertex (if embedded)
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> face_of_dart_;
  int outer_face_ = -1;
  bool connected_ = false;
  std::vector<int> vertex_labels_, edge_labels_;
  std::map<int, int> vertex_index_, edge_index_;
  std::vector<int> boundary_order_;

  friend Graph trace_embedding(Graph g, const GraphSpec& spec);
};

/// Faces induced by a rotation system on an arbitrary subset of edges.
/// Used for the derived graph obtained by deleting dual-path edges.
struct TracedFaces {
  std::vector<std::vector<Dart>> faces;
  std::vector<int> face_of_dart;  // -1 for darts of absent edges
};
TracedFaces trace_faces_subset(const Graph& g, EdgeMask present);

/// Parses/serializes the JSON graph format. Weight fields are returned
/// separately (see weights.hpp for conversion helpers).
GraphSpec graph_spec_from_json(const std::string& text);
std::string graph_spec_to_json(const GraphSpec& spec);

}  // namespace atlab
