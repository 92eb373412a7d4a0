#include "atlab/totpos.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "atlab/nodes.hpp"

namespace atlab {

namespace {

// all simple paths from cur to target avoiding `used`; invokes fn(path mask)
bool try_paths(const Graph& g, int cur, int target, VertexMask used,
               const std::function<bool(VertexMask)>& done) {
  if (cur == target) return done(used);
  for (int e : g.incident_edges(cur)) {
    int w = g.other_end(e, cur);
    if (used >> w & 1u) continue;
    if (try_paths(g, w, target, used | (VertexMask{1} << w), done)) return true;
  }
  return false;
}

bool route_all(const Graph& g, const std::vector<int>& srcs, const std::vector<int>& snks,
               std::size_t i, VertexMask used) {
  if (i == srcs.size()) return true;
  int s = srcs[i], t = snks[i];
  if (used >> s & 1u || used >> t & 1u) return false;
  return try_paths(g, s, t, used | (VertexMask{1} << s), [&](VertexMask path_used) {
    return route_all(g, srcs, snks, i + 1, path_used);
  });
}

}  // namespace

bool disjoint_paths_exhaustive(const Graph& g, const std::vector<int>& sources,
                               const std::vector<int>& sinks) {
  std::vector<int> perm(sinks);
  std::sort(perm.begin(), perm.end());
  do {
    if (route_all(g, sources, perm, 0, 0)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool disjoint_paths_maxflow(const Graph& g, const std::vector<int>& sources,
                            const std::vector<int>& sinks) {
  // split each vertex into in/out with unit capacity; unit arcs both ways
  // along edges; super source/sink at the ends
  int n = g.vertex_count();
  int nodes = 2 * n + 2, S = 2 * n, T = 2 * n + 1;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v) cap[in(v)][out(v)] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    cap[out(u)][in(v)] = 1;
    cap[out(v)][in(u)] = 1;
  }
  for (int s : sources) cap[S][in(s)] = 1;
  for (int t : sinks) cap[out(t)][T] = 1;
  int flow = 0;
  for (;;) {
    std::vector<int> prev(nodes, -1);
    prev[S] = S;
    std::vector<int> q{S};
    for (std::size_t h = 0; h < q.size() && prev[T] < 0; ++h) {
      int v = q[h];
      for (int w = 0; w < nodes; ++w)
        if (prev[w] < 0 && cap[v][w] > 0) {
          prev[w] = v;
          q.push_back(w);
        }
    }
    if (prev[T] < 0) break;
    for (int v = T; v != S; v = prev[v]) {
      cap[prev[v]][v] -= 1;
      cap[v][prev[v]] += 1;
    }
    ++flow;
  }
  return flow == static_cast<int>(sources.size());
}

bool disjoint_paths_exist(const Graph& g, const std::vector<int>& sources,
                          const std::vector<int>& sinks) {
  require(sources.size() == sinks.size(), Errc::BadInput, "need equal source/sink counts");
  if (sources.size() <= 3) return disjoint_paths_exhaustive(g, sources, sinks);
  return disjoint_paths_maxflow(g, sources, sinks);
}

TotPosReport total_positivity_scan(const Graph& g, const EdgeWeights& w,
                                   const std::vector<int>& sources,
                                   const std::vector<int>& sinks, int workers) {
  int n = static_cast<int>(sources.size());
  require(n >= 1 && n <= 6, Errc::TooLarge, "pattern size capped at 6");
  phi_spec_for_pattern(g, sources, sinks);  // validates the ccw parallel shape

  SpinOracle oracle(g, w);
  oracle.workers = workers;
  std::vector<std::pair<VertexMask, VertexMask>> obs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      obs.push_back({(VertexMask{1} << sources[i]) | (VertexMask{1} << sinks[j]), 0});
  auto vals = oracle.sigma_batch(obs);

  TotPosReport rep;
  rep.m.rows = rep.m.cols = n;
  rep.m.a = vals;

  for (std::uint32_t im = 1; im < (1u << n); ++im) {
    for (std::uint32_t jm = 1; jm < (1u << n); ++jm) {
      if (std::popcount(im) != std::popcount(jm)) continue;
      MinorRecord rec;
      std::vector<int> sv, tv;
      for (int i = 0; i < n; ++i) {
        if (im >> i & 1u) {
          rec.rows.push_back(i);
          sv.push_back(sources[i]);
        }
        if (jm >> i & 1u) {
          rec.cols.push_back(i);
          tv.push_back(sinks[i]);
        }
      }
      int k = static_cast<int>(rec.rows.size());
      RectMatrix sub;
      sub.rows = sub.cols = k;
      sub.a.resize(k * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = rep.m.at(rec.rows[i], rec.cols[j]);
      rec.det = determinant(sub);
      rec.paths_exist = disjoint_paths_exist(g, sv, tv);
      rec.consistent = rec.det >= 0 && ((rec.det > 0) == rec.paths_exist);
      rep.all_nonneg = rep.all_nonneg && rec.det >= 0;
      rep.all_consistent = rep.all_consistent && rec.consistent;
      rep.minors.push_back(std::move(rec));
    }
  }
  return rep;
}

}  // namespace atlab
