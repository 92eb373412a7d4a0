#include "atlab/inequalities.hpp"

#include <bit>

#include "atlab/pfaffian.hpp"

namespace atlab {

WeightRegion region_check(const EdgeWeights& w) {
  WeightRegion r;
  for (std::size_t e = 0; e < w.x.size(); ++e) {
    const Rational &x = w.x[e], &y = w.y[e];
    bool nn = x >= 0 && y >= 0;
    Rational det = (y + 1) * (y + 1) - x * x;
    r.nonneg = r.nonneg && nn;
    r.simon_region = r.simon_region && nn && det <= 1;
    r.u_zero = r.u_zero && det == 1;
  }
  return r;
}

namespace {

void require_region(const EdgeWeights& w, bool simon) {
  WeightRegion r = region_check(w);
  if (simon)
    require(r.simon_region, Errc::RegionViolation,
            "weights must satisfy x>=0, y>=0, (y+1)^2-x^2<=1");
  else
    require(r.nonneg, Errc::RegionViolation, "weights must satisfy x>=0, y>=0");
}

}  // namespace

IneqResult check_griffiths_pair(const Graph& g, const EdgeWeights& w, VertexMask A, VertexMask B,
                                int workers) {
  require_region(w, false);
  SpinOracle oracle(g, w);
  oracle.workers = workers;
  auto vals = oracle.sigma_batch({{A ^ B, 0}, {A, B}});
  return {vals[0], vals[1], vals[0] >= vals[1]};
}

IneqResult check_negative_association(const Graph& g, const EdgeWeights& w, int u, int v, int wv,
                                      int workers) {
  require_region(w, true);
  SpinOracle oracle(g, w);
  oracle.workers = workers;
  VertexMask mu = VertexMask{1} << u, mv = VertexMask{1} << v, mw = VertexMask{1} << wv;
  auto vals = oracle.sigma_batch({{mu ^ mw, 0}, {mw ^ mv, 0}, {mu ^ mw, mw ^ mv}});
  Rational lhs = vals[0] * vals[1];
  return {lhs, vals[2], lhs >= vals[2]};
}

bool is_separator(const Graph& g, int u, int v, const std::vector<int>& W) {
  VertexMask blocked = 0;
  for (int w : W) blocked |= VertexMask{1} << w;
  if ((blocked >> u & 1u) || (blocked >> v & 1u)) return true;  // endpoint in W separates
  std::vector<int> stack{u};
  VertexMask seen = VertexMask{1} << u;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    if (a == v) return false;
    for (int e : g.incident_edges(a)) {
      int b = g.other_end(e, a);
      if ((seen >> b & 1u) || (blocked >> b & 1u)) continue;
      seen |= VertexMask{1} << b;
      stack.push_back(b);
    }
  }
  return true;
}

IneqResult check_simon(const Graph& g, const EdgeWeights& w, int u, int v,
                       const std::vector<int>& separator, int workers) {
  require_region(w, true);
  require(u != v, Errc::BadInput, "u and v must be distinct");
  require(is_separator(g, u, v, separator), Errc::NotASeparator,
          "the set does not separate u from v");
  SpinOracle oracle(g, w);
  oracle.workers = workers;
  std::vector<std::pair<VertexMask, VertexMask>> obs;
  VertexMask mu = VertexMask{1} << u, mv = VertexMask{1} << v;
  obs.push_back({mu ^ mv, 0});
  for (int s : separator) {
    VertexMask ms = VertexMask{1} << s;
    obs.push_back({mu ^ ms, 0});
    obs.push_back({ms ^ mv, 0});
  }
  auto vals = oracle.sigma_batch(obs);
  Rational rhs = 0;
  for (std::size_t i = 0; i < separator.size(); ++i) rhs += vals[1 + 2 * i] * vals[2 + 2 * i];
  return {vals[0], rhs, vals[0] <= rhs};
}

IneqResult check_gaussian(const Graph& g, const EdgeWeights& w, VertexMask S, int workers) {
  require_region(w, true);
  require(std::popcount(S) % 2 == 0, Errc::OddSet, "gaussian bound needs an even vertex set");
  SpinOracle oracle(g, w);
  oracle.workers = workers;
  std::vector<int> verts;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (S >> v & 1u) verts.push_back(v);
  // collect the two-point table in one sweep, then sum over pairings
  std::vector<std::pair<VertexMask, VertexMask>> obs{{S, 0}};
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      obs.push_back({(VertexMask{1} << verts[i]) | (VertexMask{1} << verts[j]), 0});
  auto vals = oracle.sigma_batch(obs);
  auto pair_value = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    int m = static_cast<int>(verts.size());
    // index of (a,b), a<b, in the row-major upper triangle
    int idx = a * (2 * m - a - 1) / 2 + (b - a - 1);
    return vals[1 + idx];
  };
  Rational rhs = 0;
  for_each_pairing(static_cast<int>(verts.size()), [&](const NodePairing& p) {
    Rational term = 1;
    for (auto [a, b] : p.pairs) term *= pair_value(a, b);
    rhs += term;
  });
  return {vals[0], rhs, vals[0] <= rhs};
}

}  // namespace atlab
