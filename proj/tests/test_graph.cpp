#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atlab/families.hpp>
#include <atlab/graph.hpp>

using namespace atlab;

namespace {

Graph family(const std::string& name, int n = 0, int rows = 0, int cols = 0) {
  FamilyParams p;
  p.n = n;
  p.rows = rows;
  p.cols = cols;
  return Graph::build(generate_graph(name, p));
}

}  // namespace

TEST_CASE("four-cycle: faces and Euler") {
  Graph g = family("cycle", 4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.face_count() == 2);  // 4 - 4 + 2 = 2
  CHECK(g.has_embedding());
  std::vector<int> expect{0, 1, 2, 3};
  CHECK(g.boundary_order() == expect);
}

TEST_CASE("single edge: one face") {
  Graph g = family("path", 2);
  CHECK(g.face_count() == 1);
  CHECK(g.outer_face() == 0);
  CHECK(g.faces()[0].size() == 2);  // both sides of the edge
}

TEST_CASE("path3 boundary keeps first occurrences") {
  Graph g = family("path", 3);
  std::vector<int> expect{0, 1, 2};
  CHECK(g.boundary_order() == expect);
}

TEST_CASE("3x3 grid: counts and perimeter order") {
  Graph g = family("grid", 0, 3, 3);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 5);
  // counterclockwise perimeter, derived by hand from the embedding
  std::vector<int> expect{0, 1, 2, 5, 8, 7, 6, 3};
  CHECK(g.boundary_order() == expect);
}

TEST_CASE("theta and chorded cycle") {
  Graph g = family("theta");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.face_count() == 3);
  Graph h = family("c4chord");
  CHECK(h.face_count() == 3);
}

TEST_CASE("face walk lengths sum to 2E") {
  for (auto& [name, spec] : default_family()) {
    Graph g = Graph::build(spec);
    if (!g.has_embedding()) continue;
    std::size_t total = 0;
    for (const auto& f : g.faces()) total += f.size();
    CHECK(total == 2 * static_cast<std::size_t>(g.edge_count()));
  }
}

TEST_CASE("K5 builds without an embedding") {
  Graph g = family("complete", 5);
  CHECK(!g.has_embedding());
  CHECK(g.edge_count() == 10);
  CHECK_THROWS_AS(g.boundary_order(), Error);
}

TEST_CASE("rotation rotated cyclically gives the same faces") {
  GraphSpec spec = generate_graph("grid", {.rows = 2, .cols = 3});
  Graph g1 = Graph::build(spec);
  auto rot = *spec.rotation;
  for (auto& [v, order] : rot)
    if (order.size() > 1) std::rotate(order.begin(), order.begin() + 1, order.end());
  spec.rotation = rot;
  Graph g2 = Graph::build(spec);
  CHECK(g1.face_count() == g2.face_count());
  CHECK(g1.boundary_order() == g2.boundary_order());
}

TEST_CASE("malformed inputs are rejected") {
  GraphSpec spec = generate_graph("cycle", {.n = 4});
  SUBCASE("rotation not a permutation") {
    (*spec.rotation)[0] = {0, 0};
    CHECK_THROWS_WITH_AS(Graph::build(spec), doctest::Contains("rotation"), Error);
  }
  SUBCASE("outer walk matching no face") {
    spec.outer_walk = std::vector<int>{0, 1};
    try {
      Graph::build(spec);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OuterFaceInvalid);
    }
  }
  SUBCASE("Euler violation") {
    // K5 with a fake rotation cannot embed
    GraphSpec k5 = generate_graph("complete", {.n = 5});
    std::map<int, std::vector<int>> rot;
    for (int v = 0; v < 5; ++v) {
      std::vector<int> inc;
      for (const auto& e : k5.edges)
        if (e.u == v || e.v == v) inc.push_back(e.id);
      rot[v] = inc;
    }
    k5.rotation = rot;
    k5.outer_walk = std::vector<int>{0, 4, 1};  // triangle 0-1-2
    try {
      Graph::build(k5);
      CHECK(false);
    } catch (const Error& e) {
      CHECK((e.code() == Errc::NonPlanarEmbedding || e.code() == Errc::OuterFaceInvalid));
    }
  }
  SUBCASE("disconnected with embedding requested") {
    GraphSpec s;
    s.vertices = {0, 1, 2, 3};
    s.edges.push_back({0, 0, 1, Rational(1), Rational(1), {}, {}});
    s.edges.push_back({1, 2, 3, Rational(1), Rational(1), {}, {}});
    s.rotation = std::map<int, std::vector<int>>{{0, {0}}, {1, {0}}, {2, {1}}, {3, {1}}};
    s.outer_walk = std::vector<int>{0, 0};
    try {
      Graph::build(s);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DisconnectedWhenPlanarOpsRequested);
    }
  }
}

TEST_CASE("graph JSON round trip") {
  GraphSpec spec = generate_graph("theta", {});
  std::string text = graph_spec_to_json(spec);
  GraphSpec back = graph_spec_from_json(text);
  CHECK(back.vertices == spec.vertices);
  CHECK(back.edges.size() == spec.edges.size());
  CHECK(*back.outer_walk == *spec.outer_walk);
  Graph g = Graph::build(back);
  CHECK(g.face_count() == 3);
  CHECK(*back.edges[0].x == Rational(1, 2));
}
