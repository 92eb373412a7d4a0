#include "atlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace atlab {

namespace {

struct Builder {
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> outer_cw;  // perimeter vertices in clockwise order
  bool embedded = true;

  int add_vertex(double x, double y) {
    pos.push_back({x, y});
    return static_cast<int>(pos.size()) - 1;
  }
  void add_edge(int u, int v) { edges.push_back({u, v}); }

  GraphSpec finish(const FamilyParams& p) const {
    GraphSpec spec;
    for (int v = 0; v < static_cast<int>(pos.size()); ++v) spec.vertices.push_back(v);
    std::map<std::pair<int, int>, int> eid;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      auto [u, v] = edges[e];
      GraphSpec::EdgeIn in;
      in.id = e;
      in.u = u;
      in.v = v;
      in.x = p.x;
      in.y = p.y;
      spec.edges.push_back(in);
      eid[{std::min(u, v), std::max(u, v)}] = e;
    }
    if (!embedded) return spec;

    std::map<int, std::vector<int>> rot;
    for (int v = 0; v < static_cast<int>(pos.size()); ++v) {
      std::vector<std::pair<double, int>> by_angle;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [a, b] = edges[e];
        int other = a == v ? b : (b == v ? a : -1);
        if (other < 0) continue;
        double ang =
            std::atan2(pos[other].second - pos[v].second, pos[other].first - pos[v].first);
        by_angle.push_back({ang, e});
      }
      std::sort(by_angle.begin(), by_angle.end());
      std::vector<int> order;
      for (auto& [ang, e] : by_angle) order.push_back(e);
      rot[v] = order;
    }
    spec.rotation = rot;

    std::vector<int> walk;
    int k = static_cast<int>(outer_cw.size());
    for (int i = 0; i < k; ++i) {
      auto key = std::minmax(outer_cw[i], outer_cw[(i + 1) % k]);
      walk.push_back(eid.at({key.first, key.second}));
    }
    spec.outer_walk = walk;
    return spec;
  }
};

GraphSpec make_path(int n, const FamilyParams& p) {
  require(n >= 2 && n <= 12, Errc::TooLarge, "path size must be in [2,12]");
  Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex(i, 0);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  // single face: out-and-back walk
  for (int i = 0; i < n - 1; ++i) b.outer_cw.push_back(i);
  for (int i = n - 1; i > 0; --i) b.outer_cw.push_back(i);
  return b.finish(p);
}

GraphSpec make_cycle(int n, const FamilyParams& p) {
  require(n >= 3 && n <= 12, Errc::TooLarge, "cycle size must be in [3,12]");
  Builder b;
  for (int i = 0; i < n; ++i)
    b.add_vertex(std::cos(2 * M_PI * i / n), std::sin(2 * M_PI * i / n));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (int i = n - 1; i >= 0; --i) b.outer_cw.push_back((i + 1) % n);
  return b.finish(p);
}

GraphSpec make_grid(int rows, int cols, const FamilyParams& p) {
  require(rows >= 2 && cols >= 2, Errc::BadInput, "grid needs at least 2x2");
  require(static_cast<long>(rows) * cols <= 12, Errc::TooLarge, "grid capped at 12 vertices");
  Builder b;
  auto at = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) b.add_vertex(c, r);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) b.add_edge(at(r, c), at(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) b.add_edge(at(r, c), at(r + 1, c));
  // clockwise perimeter: up the left side, along the top, down, back
  for (int r = 0; r + 1 < rows; ++r) b.outer_cw.push_back(at(r, 0));
  for (int c = 0; c + 1 < cols; ++c) b.outer_cw.push_back(at(rows - 1, c));
  for (int r = rows - 1; r > 0; --r) b.outer_cw.push_back(at(r, cols - 1));
  for (int c = cols - 1; c > 0; --c) b.outer_cw.push_back(at(0, c));
  return b.finish(p);
}

GraphSpec make_complete(int n, const FamilyParams& p) {
  require(n >= 3 && n <= 5, Errc::TooLarge, "complete graphs supported up to K5");
  Builder b;
  if (n == 3) {
    b.add_vertex(0, 0);
    b.add_vertex(1, 0);
    b.add_vertex(0.5, 0.9);
    b.outer_cw = {0, 2, 1};
  } else if (n == 4) {
    b.add_vertex(0, 0);
    b.add_vertex(1, 0);
    b.add_vertex(0.5, 0.9);
    b.add_vertex(0.5, 0.3);
    b.outer_cw = {0, 2, 1};
  } else {
    for (int i = 0; i < 5; ++i) b.add_vertex(i, 0);
    b.embedded = false;  // K5 has no planar embedding
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.finish(p);
}

GraphSpec make_theta(const FamilyParams& p) {
  Builder b;
  b.add_vertex(0, 0);   // left hub
  b.add_vertex(2, 0);   // right hub
  b.add_vertex(1, 1);   // upper midpoint
  b.add_vertex(1, -1);  // lower midpoint
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(2, 1);
  b.add_edge(0, 3);
  b.add_edge(3, 1);
  b.outer_cw = {0, 2, 1, 3};
  return b.finish(p);
}

GraphSpec make_c4chord(const FamilyParams& p) {
  Builder b;
  b.add_vertex(0, 0);
  b.add_vertex(1, 0);
  b.add_vertex(1, 1);
  b.add_vertex(0, 1);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 0);
  b.add_edge(0, 2);
  b.outer_cw = {0, 3, 2, 1};
  return b.finish(p);
}

}  // namespace

GraphSpec generate_graph(const std::string& family, const FamilyParams& params) {
  if (family == "path") return make_path(params.n, params);
  if (family == "cycle") return make_cycle(params.n, params);
  if (family == "grid") return make_grid(params.rows, params.cols, params);
  if (family == "complete") return make_complete(params.n, params);
  if (family == "theta") return make_theta(params);
  if (family == "c4chord") return make_c4chord(params);
  fail(Errc::BadInput, "unknown family '" + family + "'");
}

std::vector<std::pair<std::string, GraphSpec>> default_family() {
  FamilyParams p;
  std::vector<std::pair<std::string, GraphSpec>> out;
  p.n = 3;
  out.push_back({"path3", generate_graph("path", p)});
  p.n = 4;
  out.push_back({"path4", generate_graph("path", p)});
  p.n = 4;
  out.push_back({"cycle4", generate_graph("cycle", p)});
  p.n = 6;
  out.push_back({"cycle6", generate_graph("cycle", p)});
  out.push_back({"theta", generate_graph("theta", p)});
  p.rows = 2;
  p.cols = 3;
  out.push_back({"grid2x3", generate_graph("grid", p)});
  p.n = 4;
  out.push_back({"complete4", generate_graph("complete", p)});
  return out;
}

}  // namespace atlab
