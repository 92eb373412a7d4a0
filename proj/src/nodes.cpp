#include "atlab/nodes.hpp"

#include <algorithm>
#include <bit>
#include <list>

#include "atlab/currents.hpp"

namespace atlab {

Coloring make_coloring(const NodeSequence& seq, const std::vector<bool>& blue) {
  require(static_cast<int>(blue.size()) == seq.size(), Errc::BadInput,
          "coloring size mismatch");
  Coloring c;
  c.blue = blue;
  for (int i = 0; i < seq.size(); ++i) {
    bool source = seq.odd_class(i) == blue[i];  // odd&blue or even&red
    (source ? c.sources : c.sinks).push_back(i);
  }
  return c;
}

NodeSequence abstract_sequence(int n) {
  NodeSequence seq;
  for (int i = 0; i < n; ++i) seq.nodes.push_back(Node{i, -1, 0});
  return seq;
}

namespace {

// Emit nodes for one original insertion in sequence order.
void emit(NodeSequence& seq, std::vector<bool>& blue, int vertex, int face, bool doubled,
          bool is_blue) {
  if (doubled) {
    seq.nodes.push_back(Node{vertex, face, 1});
    seq.nodes.push_back(Node{vertex, face, 2});
    blue.push_back(is_blue);
    blue.push_back(is_blue);
  } else {
    seq.nodes.push_back(Node{vertex, face, 0});
    blue.push_back(is_blue);
  }
}

}  // namespace

std::pair<NodeSequence, Coloring> build_node_sequence(const Graph& g, const PhiSpec& spec) {
  validate_spec(g, spec);
  g.require_embedding();
  VertexMask all = spec.a() | spec.b();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (all >> v & 1u)
      require(g.on_boundary(v), Errc::NotOnBoundary,
              "phi insertion vertex " + std::to_string(g.vertex_label(v)) +
                  " is not on the outer face");
  NodeSequence seq;
  std::vector<bool> blue;
  for (int v : g.boundary_order()) {
    if (!(all >> v & 1u)) continue;
    bool is_blue = (spec.b() >> v & 1u) != 0;
    bool doubled = ((spec.A2 | spec.B2) >> v & 1u) != 0;
    emit(seq, blue, v, -1, doubled, is_blue);
  }
  return {seq, make_coloring(seq, blue)};
}

std::pair<NodeSequence, Coloring> build_corner_sequence(const Graph& g, const ChiSpec& spec,
                                                        DualPathRegistry& reg) {
  validate_spec(g, spec);
  auto order = corner_node_order(g, spec.all(), reg);
  NodeSequence seq;
  std::vector<bool> blue;
  auto contains = [](const std::vector<Corner>& cs, const Corner& c) {
    return std::find(cs.begin(), cs.end(), c) != cs.end();
  };
  for (const Corner& c : order) {
    bool doubled = contains(spec.A2, c) || contains(spec.B2, c);
    emit(seq, blue, c.vertex, c.face, doubled, spec.is_b(c));
  }
  return {seq, make_coloring(seq, blue)};
}

bool is_balanced(const Coloring& c) { return c.sources.size() == c.sinks.size(); }

std::optional<NodePairing> planar_pairing_witness(const NodeSequence& seq, const Coloring& c) {
  int n = seq.size();
  if (n % 2 != 0 || !is_balanced(c)) return std::nullopt;
  // class and color per node
  std::vector<char> is_source(n, 0);
  for (int i : c.sources) is_source[i] = 1;
  std::list<int> ring;
  for (int i = 0; i < n; ++i) ring.push_back(i);
  NodePairing out;
  while (!ring.empty()) {
    bool paired = false;
    for (auto it = ring.begin(); it != ring.end(); ++it) {
      auto jt = std::next(it) == ring.end() ? ring.begin() : std::next(it);
      if (it == jt) break;
      if (is_source[*it] && !is_source[*jt]) {
        // adjacent source/sink must share a color; pair and remove
        if (c.blue[*it] != c.blue[*jt]) return std::nullopt;
        out.pairs.push_back({*it, *jt});
        int a = *it, b = *jt;
        ring.remove(a);
        ring.remove(b);
        paired = true;
        break;
      }
    }
    if (!paired) return std::nullopt;
  }
  return out;
}

bool is_realizable(const NodeSequence& seq, const Coloring& c) {
  return planar_pairing_witness(seq, c).has_value();
}

std::optional<ParallelPattern> parallel_pattern_of(const NodeSequence& seq, const Coloring& c) {
  int n2 = seq.size();
  if (n2 == 0 || n2 % 2 != 0) return std::nullopt;
  int n = n2 / 2;
  if (!is_balanced(c)) return std::nullopt;
  std::vector<char> is_source(n2, 0);
  for (int i : c.sources) is_source[i] = 1;
  // sources must form one contiguous cyclic arc
  int start = -1;
  for (int i = 0; i < n2; ++i) {
    int prev = (i + n2 - 1) % n2;
    if (is_source[i] && !is_source[prev]) {
      if (start >= 0) return std::nullopt;
      start = i;
    }
  }
  if (start < 0) return std::nullopt;  // all sources or all sinks
  ParallelPattern p;
  for (int i = 0; i < n; ++i) {
    if (!is_source[(start + i) % n2]) return std::nullopt;
    p.source_nodes.push_back((start + i) % n2);
  }
  for (int i = 0; i < n; ++i) {
    int idx = (start + n2 - 1 - i) % n2;  // t_1 sits just before s_1 cyclically
    if (is_source[idx]) return std::nullopt;
    p.sink_nodes.push_back(idx);
  }
  return p;
}

PhiSpec phi_spec_for_pattern(const Graph& g, const std::vector<int>& sources,
                             const std::vector<int>& sinks) {
  require(!sources.empty() && sources.size() == sinks.size(), Errc::PatternMismatch,
          "need equally many sources and sinks");
  int n = static_cast<int>(sources.size());
  VertexMask all = 0;
  for (int v : sources) all |= VertexMask{1} << v;
  for (int v : sinks) all |= VertexMask{1} << v;
  require(std::popcount(all) == 2 * n, Errc::PatternMismatch, "pattern vertices must be distinct");

  // the cyclic boundary order restricted to the pattern vertices
  std::vector<int> cyc;
  for (int v : g.boundary_order())
    if (all >> v & 1u) cyc.push_back(v);
  require(static_cast<int>(cyc.size()) == 2 * n, Errc::NotOnBoundary,
          "pattern vertices must lie on the outer face");
  std::vector<int> want(sources);
  for (int i = n - 1; i >= 0; --i) want.push_back(sinks[i]);
  auto at = std::find(cyc.begin(), cyc.end(), sources[0]);
  int off = static_cast<int>(at - cyc.begin());
  for (int i = 0; i < 2 * n; ++i)
    require(cyc[(off + i) % (2 * n)] == want[i], Errc::PatternMismatch,
            "vertices are not in s_1..s_n,t_n..t_1 counterclockwise order");

  // color forced by the source/sink rule on the anchored sequence
  VertexMask source_set = 0;
  for (int v : sources) source_set |= VertexMask{1} << v;
  PhiSpec spec;
  for (int i = 0; i < 2 * n; ++i) {
    int v = cyc[i];
    bool odd_pos = i % 2 == 0;
    bool is_source = (source_set >> v & 1u) != 0;
    bool blue = is_source == odd_pos;
    if (blue)
      spec.B1 |= VertexMask{1} << v;
    else
      spec.A1 |= VertexMask{1} << v;
  }
  return spec;
}

std::pair<NodeSequence, Coloring> sequence_for_pattern(const Graph& g,
                                                       const std::vector<int>& sources,
                                                       const std::vector<int>& sinks) {
  phi_spec_for_pattern(g, sources, sinks);  // validates shape and boundary order
  int n = static_cast<int>(sources.size());
  NodeSequence seq;
  std::vector<bool> blue;
  for (int j = 0; j < n; ++j) {
    seq.nodes.push_back(Node{sources[j], -1, 0});
    blue.push_back(j % 2 == 0);  // pair (s_j, t_j) blue for odd 1-based j
  }
  for (int j = n - 1; j >= 0; --j) {
    seq.nodes.push_back(Node{sinks[j], -1, 0});
    blue.push_back(j % 2 == 0);
  }
  return {seq, make_coloring(seq, blue)};
}

bool parallel_pattern_check(const Graph& g, EdgeMask omega, const NodeSequence& seq,
                            const Coloring& c) {
  auto pat = parallel_pattern_of(seq, c);
  require(pat.has_value(), Errc::PatternMismatch, "coloring is not the parallel pattern");
  VertexMask all_nodes = 0;
  for (const Node& nd : seq.nodes) all_nodes |= VertexMask{1} << nd.vertex;
  if (!components_all_even(g, omega, all_nodes)) return false;
  int n = static_cast<int>(pat->source_nodes.size());
  for (int i = 0; i < n; ++i) {
    VertexMask si = VertexMask{1} << seq.nodes[pat->source_nodes[i]].vertex;
    for (int j = 0; j < n; ++j) {
      VertexMask tj = VertexMask{1} << seq.nodes[pat->sink_nodes[j]].vertex;
      bool conn = connects(g, omega, si, tj);
      if (i == j && !conn) return false;
      if (i != j && conn) return false;
    }
  }
  return true;
}

}  // namespace atlab
