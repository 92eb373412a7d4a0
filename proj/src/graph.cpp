#include "atlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace atlab {

namespace {

// Next dart of the face walk: at the head of d, leave through the rotation
// successor of the arrival edge. Inner faces come out counterclockwise,
// so the interior lies on the left of every dart.
Dart next_in_face(const Graph& g, const std::vector<std::vector<int>>& rot, const Dart& d) {
  int h = g.dart_head(d);
  const auto& r = rot[h];
  auto it = std::find(r.begin(), r.end(), d.edge);
  int pos = static_cast<int>(it - r.begin());
  int e2 = r[(pos + 1) % r.size()];
  return Dart{e2, g.edge(e2).u == h ? 0 : 1};
}

}  // namespace

Graph trace_embedding(Graph g, const GraphSpec& spec) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  g.rotation_.assign(n, {});
  std::set<int> seen_vertices;
  for (const auto& [vlab, order] : *spec.rotation) {
    auto it = g.vertex_index_.find(vlab);
    require(it != g.vertex_index_.end(), Errc::MalformedRotation,
            "rotation lists unknown vertex " + std::to_string(vlab));
    int v = it->second;
    std::vector<int> r;
    for (int elab : order) {
      auto eit = g.edge_index_.find(elab);
      require(eit != g.edge_index_.end(), Errc::MalformedRotation,
              "rotation at vertex " + std::to_string(vlab) + " lists unknown edge " +
                  std::to_string(elab));
      r.push_back(eit->second);
    }
    std::vector<int> want = g.edges_of_[v], got = r;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    require(want == got, Errc::MalformedRotation,
            "rotation at vertex " + std::to_string(vlab) +
                " is not a permutation of its incident edges");
    g.rotation_[v] = std::move(r);
    seen_vertices.insert(v);
  }
  require(static_cast<int>(seen_vertices.size()) == n, Errc::MalformedRotation,
          "rotation missing for some vertex");

  // Trace all faces; ids follow the first dart scanned in (edge, dir) order.
  g.face_of_dart_.assign(2 * m, -1);
  for (int e = 0; e < m; ++e) {
    for (int dir = 0; dir < 2; ++dir) {
      if (g.face_of_dart_[e * 2 + dir] >= 0) continue;
      int fid = static_cast<int>(g.faces_.size());
      std::vector<Dart> walk;
      Dart d{e, dir};
      do {
        g.face_of_dart_[d.edge * 2 + d.dir] = fid;
        walk.push_back(d);
        d = next_in_face(g, g.rotation_, d);
      } while (!(d == Dart{e, dir}));
      g.faces_.push_back(std::move(walk));
    }
  }

  if (g.connected_) {
    int F = g.face_count();
    require(n - m + F == 2, Errc::NonPlanarEmbedding,
            "Euler check failed: V-E+F = " + std::to_string(n - m + F));
  }

  // Match the declared outer walk against a traced face: first as a cyclic
  // edge sequence (pins the orientation, e.g. the two faces of a cycle share
  // one edge set), falling back to a unique multiset match.
  std::vector<int> outer_edges;
  for (int elab : *spec.outer_walk) {
    auto eit = g.edge_index_.find(elab);
    require(eit != g.edge_index_.end(), Errc::OuterFaceInvalid,
            "outer walk lists unknown edge " + std::to_string(elab));
    outer_edges.push_back(eit->second);
  }
  auto cyclic_match = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) return false;
    std::vector<int> twice = b;
    twice.insert(twice.end(), b.begin(), b.end());
    return std::search(twice.begin(), twice.end(), a.begin(), a.end()) != twice.end();
  };
  std::vector<int> multiset_hits;
  std::vector<int> want_sorted = outer_edges;
  std::sort(want_sorted.begin(), want_sorted.end());
  for (int f = 0; f < g.face_count(); ++f) {
    std::vector<int> fe;
    for (const Dart& d : g.faces_[f]) fe.push_back(d.edge);
    if (cyclic_match(outer_edges, fe)) {
      g.outer_face_ = f;
      break;
    }
    std::sort(fe.begin(), fe.end());
    if (fe == want_sorted) multiset_hits.push_back(f);
  }
  if (g.outer_face_ < 0 && multiset_hits.size() == 1) g.outer_face_ = multiset_hits[0];
  require(g.outer_face_ >= 0, Errc::OuterFaceInvalid,
          "declared outer walk does not match any traced face");

  // Faces lie to the right of their darts, so the outer walk already runs
  // counterclockwise in the drawing.
  std::vector<int> walk_vertices;
  for (const Dart& d : g.faces_[g.outer_face_]) walk_vertices.push_back(g.dart_tail(d));
  int anchor = 0;
  for (int i = 1; i < static_cast<int>(walk_vertices.size()); ++i)
    if (g.vertex_label(walk_vertices[i]) < g.vertex_label(walk_vertices[anchor])) anchor = i;
  std::vector<char> used(n, 0);
  for (int i = 0; i < static_cast<int>(walk_vertices.size()); ++i) {
    int v = walk_vertices[(anchor + i) % walk_vertices.size()];
    if (!used[v]) {
      used[v] = 1;
      g.boundary_order_.push_back(v);
    }
  }
  return g;
}

Graph Graph::build(const GraphSpec& spec) {
  Graph g;
  require(!spec.vertices.empty(), Errc::BadInput, "graph has no vertices");
  require(static_cast<int>(spec.vertices.size()) <= kMaxVertices, Errc::TooLarge,
          "too many vertices");
  require(static_cast<int>(spec.edges.size()) <= kMaxEdges, Errc::TooLarge, "too many edges");

  g.vertex_labels_ = spec.vertices;
  std::sort(g.vertex_labels_.begin(), g.vertex_labels_.end());
  require(std::adjacent_find(g.vertex_labels_.begin(), g.vertex_labels_.end()) ==
              g.vertex_labels_.end(),
          Errc::BadInput, "duplicate vertex label");
  for (int i = 0; i < static_cast<int>(g.vertex_labels_.size()); ++i)
    g.vertex_index_[g.vertex_labels_[i]] = i;

  std::vector<GraphSpec::EdgeIn> es = spec.edges;
  std::sort(es.begin(), es.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::set<std::pair<int, int>> seen_pairs;
  g.edges_of_.assign(g.vertex_labels_.size(), {});
  for (const auto& e : es) {
    require(g.edge_index_.find(e.id) == g.edge_index_.end(), Errc::BadInput,
            "duplicate edge id " + std::to_string(e.id));
    auto ui = g.vertex_index_.find(e.u), vi = g.vertex_index_.find(e.v);
    require(ui != g.vertex_index_.end() && vi != g.vertex_index_.end(), Errc::BadInput,
            "edge " + std::to_string(e.id) + " has unknown endpoint");
    int u = ui->second, v = vi->second;
    require(u != v, Errc::BadInput, "loop edge " + std::to_string(e.id));
    auto key = std::minmax(u, v);
    require(seen_pairs.insert({key.first, key.second}).second, Errc::BadInput,
            "parallel edge " + std::to_string(e.id));
    int idx = static_cast<int>(g.edges_.size());
    g.edge_index_[e.id] = idx;
    g.edge_labels_.push_back(e.id);
    g.edges_.push_back({u, v});
    g.edges_of_[u].push_back(idx);
    g.edges_of_[v].push_back(idx);
  }

  // connectivity
  std::vector<char> vis(g.vertex_count(), 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.edges_of_[v]) {
      int w = g.other_end(e, v);
      if (!vis[w]) {
        vis[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  g.connected_ = cnt == g.vertex_count();

  require(spec.rotation.has_value() == spec.outer_walk.has_value(), Errc::BadInput,
          "rotation and outer_face must be given together");
  if (spec.rotation) {
    require(g.connected_, Errc::DisconnectedWhenPlanarOpsRequested,
            "embedded graphs must be connected");
    return trace_embedding(std::move(g), spec);
  }
  return g;
}

const std::vector<int>& Graph::boundary_order() const {
  require_embedding();
  return boundary_order_;
}

bool Graph::on_boundary(int v) const {
  require_embedding();
  return std::find(boundary_order_.begin(), boundary_order_.end(), v) != boundary_order_.end();
}

int Graph::vertex_index(int label) const {
  auto it = vertex_index_.find(label);
  require(it != vertex_index_.end(), Errc::BadInput, "unknown vertex " + std::to_string(label));
  return it->second;
}

int Graph::edge_index(int label) const {
  auto it = edge_index_.find(label);
  require(it != edge_index_.end(), Errc::BadInput, "unknown edge " + std::to_string(label));
  return it->second;
}

TracedFaces trace_faces_subset(const Graph& g, EdgeMask present) {
  g.require_embedding();
  const int m = g.edge_count();
  // Restricted rotations: drop absent edges, keep the cyclic order.
  std::vector<std::vector<int>> rot = g.rotation();
  for (auto& r : rot) {
    std::vector<int> keep;
    for (int e : r)
      if (present >> e & 1u) keep.push_back(e);
    r = std::move(keep);
  }
  TracedFaces out;
  out.face_of_dart.assign(2 * m, -1);
  auto next = [&](const Dart& d) {
    int h = g.dart_head(d);
    const auto& r = rot[h];
    auto it = std::find(r.begin(), r.end(), d.edge);
    int pos = static_cast<int>(it - r.begin());
    int e2 = r[(pos + 1) % r.size()];
    return Dart{e2, g.edge(e2).u == h ? 0 : 1};
  };
  for (int e = 0; e < m; ++e) {
    if (!(present >> e & 1u)) continue;
    for (int dir = 0; dir < 2; ++dir) {
      if (out.face_of_dart[e * 2 + dir] >= 0) continue;
      int fid = static_cast<int>(out.faces.size());
      std::vector<Dart> walk;
      Dart d{e, dir};
      do {
        out.face_of_dart[d.edge * 2 + d.dir] = fid;
        walk.push_back(d);
        d = next(d);
      } while (!(d == Dart{e, dir}));
      out.faces.push_back(std::move(walk));
    }
  }
  return out;
}

// --- JSON ------------------------------------------------------------------

GraphSpec graph_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("bad graph JSON: ") + e.what());
  }
  GraphSpec spec;
  try {
    for (const auto& v : j.at("vertices")) spec.vertices.push_back(v.get<int>());
    for (const auto& e : j.at("edges")) {
      GraphSpec::EdgeIn in;
      in.id = e.at("id").get<int>();
      in.u = e.at("ends").at(0).get<int>();
      in.v = e.at("ends").at(1).get<int>();
      if (e.contains("x")) in.x = parse_rational(e.at("x").get<std::string>());
      if (e.contains("y")) in.y = parse_rational(e.at("y").get<std::string>());
      if (e.contains("J")) in.J = e.at("J").get<double>();
      if (e.contains("U")) in.U = e.at("U").get<double>();
      spec.edges.push_back(std::move(in));
    }
    if (j.contains("rotation")) {
      std::map<int, std::vector<int>> rot;
      for (const auto& [k, v] : j.at("rotation").items())
        rot[std::stoi(k)] = v.get<std::vector<int>>();
      spec.rotation = std::move(rot);
    }
    if (j.contains("outer_face")) spec.outer_walk = j.at("outer_face").get<std::vector<int>>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("bad graph JSON: ") + e.what());
  }
  return spec;
}

std::string graph_spec_to_json(const GraphSpec& spec) {
  nlohmann::json j;
  j["vertices"] = spec.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : spec.edges) {
    nlohmann::json je;
    je["id"] = e.id;
    je["ends"] = {e.u, e.v};
    if (e.x) je["x"] = rational_str(*e.x);
    if (e.y) je["y"] = rational_str(*e.y);
    if (e.J) je["J"] = *e.J;
    if (e.U) je["U"] = *e.U;
    j["edges"].push_back(je);
  }
  if (spec.rotation) {
    nlohmann::json jr = nlohmann::json::object();
    for (const auto& [v, order] : *spec.rotation) jr[std::to_string(v)] = order;
    j["rotation"] = jr;
  }
  if (spec.outer_walk) j["outer_face"] = *spec.outer_walk;
  return j.dump(2);
}

}  // namespace atlab
