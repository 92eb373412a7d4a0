#include "atlab/currents.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "atlab/parallel.hpp"

namespace atlab {

int default_max_edges() {
  if (const char* env = std::getenv("ATLAB_MAX_EDGES")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, kMaxEdges);
  }
  return 14;
}

VertexMask current_sources(const Graph& g, EdgeMask eta) {
  VertexMask odd = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (eta >> e & 1u) odd ^= g.ends_mask(e);
  return odd;
}

void for_each_current(const Graph& g, VertexMask sources,
                      const std::function<void(Current)>& fn, int max_edges) {
  if (max_edges < 0) max_edges = default_max_edges();
  require(g.edge_count() <= max_edges, Errc::TooLarge,
          "current enumeration capped at " + std::to_string(max_edges) + " edges");
  if (std::popcount(sources) % 2 != 0) return;  // no currents with odd sources
  const int m = g.edge_count();
  // plain recursive generation; the oracle below has its own tuned walker
  std::function<void(int, Current, VertexMask)> rec = [&](int e, Current cur, VertexMask par) {
    if (e == m) {
      if (par == sources) fn(cur);
      return;
    }
    rec(e + 1, cur, par);
    Current with{cur.omega | (EdgeMask{1} << e), cur.eta};
    rec(e + 1, with, par);
    with.eta |= EdgeMask{1} << e;
    rec(e + 1, with, par ^ g.ends_mask(e));
  };
  rec(0, {}, 0);
}

std::vector<Current> enumerate_currents(const Graph& g, VertexMask sources, int max_edges) {
  std::vector<Current> out;
  for_each_current(g, sources, [&](Current n) { out.push_back(n); }, max_edges);
  return out;
}

Rational current_weight(const Graph& g, Current n, const EdgeWeights& w) {
  Rational prod = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (n.eta >> e & 1u)
      prod *= w.x[e];
    else if (n.omega >> e & 1u)
      prod *= w.y[e];
  }
  BigInt two = BigInt(1) << component_count(g, n.omega);
  return prod * Rational(two);
}

namespace {

// Plain DSU for the standalone component queries.
struct SimpleDsu {
  std::vector<int> parent;
  explicit SimpleDsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

SimpleDsu omega_dsu(const Graph& g, EdgeMask omega) {
  SimpleDsu d(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (omega >> e & 1u) d.unite(g.edge(e).u, g.edge(e).v);
  return d;
}

}  // namespace

int component_count(const Graph& g, EdgeMask omega) {
  SimpleDsu d = omega_dsu(g, omega);
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (d.find(v) == v) ++k;
  return k;
}

int components_meeting(const Graph& g, EdgeMask omega, VertexMask marked) {
  SimpleDsu d = omega_dsu(g, omega);
  VertexMask roots = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (marked >> v & 1u) roots |= VertexMask{1} << d.find(v);
  return std::popcount(roots);
}

bool components_all_even(const Graph& g, EdgeMask omega, VertexMask marked) {
  SimpleDsu d = omega_dsu(g, omega);
  std::vector<int> cnt(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (marked >> v & 1u) cnt[d.find(v)] ^= 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (cnt[v]) return false;
  return true;
}

bool connects(const Graph& g, EdgeMask omega, VertexMask a, VertexMask b) {
  SimpleDsu d = omega_dsu(g, omega);
  VertexMask ra = 0, rb = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (a >> v & 1u) ra |= VertexMask{1} << d.find(v);
    if (b >> v & 1u) rb |= VertexMask{1} << d.find(v);
  }
  return (ra & rb) != 0;
}

namespace {

/// Spanning forest of (V, omega) built by scanning edges in a given order;
/// exposes tree paths as edge masks for the explicit pairing constructions.
struct Forest {
  std::vector<int> parent, parent_edge, depth, root;

  Forest(const Graph& g, EdgeMask omega, std::span<const int> edge_order) {
    int n = g.vertex_count();
    parent.assign(n, -1);
    parent_edge.assign(n, -1);
    depth.assign(n, 0);
    root.assign(n, -1);
    std::vector<int> order(edge_order.begin(), edge_order.end());
    if (order.empty()) {
      order.resize(g.edge_count());
      std::iota(order.begin(), order.end(), 0);
    }
    SimpleDsu d(n);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other)
    for (int e : order) {
      if (!(omega >> e & 1u)) continue;
      int u = g.edge(e).u, v = g.edge(e).v;
      if (d.find(u) != d.find(v)) {
        d.unite(u, v);
        adj[u].push_back({e, v});
        adj[v].push_back({e, u});
      }
    }
    for (int s = 0; s < n; ++s) {
      if (root[s] >= 0) continue;
      root[s] = s;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, w] : adj[v]) {
          if (root[w] >= 0) continue;
          root[w] = s;
          parent[w] = v;
          parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          stack.push_back(w);
        }
      }
    }
  }

  EdgeMask path_mask(int u, int v) const {
    EdgeMask m = 0;
    while (depth[u] > depth[v]) {
      m ^= EdgeMask{1} << parent_edge[u];
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      m ^= EdgeMask{1} << parent_edge[v];
      v = parent[v];
    }
    while (u != v) {
      m ^= EdgeMask{1} << parent_edge[u];
      m ^= EdgeMask{1} << parent_edge[v];
      u = parent[u];
      v = parent[v];
    }
    return m;
  }
};

/// Pair the marked vertices within each component in label order and return
/// the xor of the tree paths. Requires omega in F_marked.
EdgeMask pairing_paths_mask(const Graph& g, EdgeMask omega, VertexMask marked,
                            const Forest& forest) {
  EdgeMask rho = 0;
  std::vector<std::vector<int>> per_root(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (marked >> v & 1u) per_root[forest.root[v]].push_back(v);
  for (const auto& group : per_root) {
    require(group.size() % 2 == 0, Errc::PreconditionViolated,
            "component holds an odd number of marked vertices");
    for (std::size_t i = 0; i + 1 < group.size(); i += 2)
      rho ^= forest.path_mask(group[i], group[i + 1]);
  }
  return rho;
}

}  // namespace

int current_sign(const Graph& g, Current n, VertexMask B, EdgeMask gammaC, EdgeMask gammaD,
                 std::span<const int> edge_order) {
  require(components_all_even(g, n.omega, B), Errc::PreconditionViolated,
          "sign needs omega in the even-component class of B");
  require(cycles_cross_evenly(g, n.omega, gammaC ^ gammaD, edge_order),
          Errc::PreconditionViolated, "sign needs evenly-crossing cycles");
  Forest forest(g, n.omega, edge_order);
  EdgeMask rho = pairing_paths_mask(g, n.omega, B, forest);
  int par = std::popcount(n.eta & gammaC) + std::popcount(rho & (gammaC ^ gammaD));
  return (par & 1) ? -1 : 1;
}

bool current_is_null(const Graph& g, Current n, const ChiSpec& spec, DualPathRegistry& reg,
                     std::span<const int> edge_order) {
  auto corners = spec.all();
  auto undoubled = spec.undoubled();
  VertexMask v1 = 0;
  std::vector<int> f1;
  for (const Corner& c : undoubled) {
    v1 |= VertexMask{1} << c.vertex;
    f1.push_back(c.face);
  }
  EdgeMask gammaF1 = reg.gamma_mask(f1);
  require(current_sources(g, n.eta) == v1, Errc::PreconditionViolated,
          "current sources must match the undoubled corner vertices");
  require(cycles_cross_evenly(g, n.omega, gammaF1, edge_order), Errc::PreconditionViolated,
          "omega must cross the undoubled disorder lines evenly");

  Forest forest(g, n.omega, edge_order);
  int m = static_cast<int>(corners.size());
  for (std::uint32_t sel = 1; sel < (1u << m); ++sel) {
    if (std::popcount(sel) % 2 != 0) continue;
    VertexMask vt = 0;
    std::vector<int> ft;
    int t_cap_b = 0;
    for (int i = 0; i < m; ++i)
      if (sel >> i & 1u) {
        vt |= VertexMask{1} << corners[i].vertex;
        ft.push_back(corners[i].face);
        if (spec.is_b(corners[i])) ++t_cap_b;
      }
    if (!components_all_even(g, n.omega, vt)) continue;
    EdgeMask rho = pairing_paths_mask(g, n.omega, vt, forest);
    int par = t_cap_b + std::popcount(n.eta & reg.gamma_mask(ft)) + std::popcount(rho & gammaF1);
    if (par & 1) return true;
  }
  return false;
}

CurrentClasses classify_current(const Graph& g, Current n, const CorrelatorSpec& spec,
                                DualPathRegistry* reg) {
  CurrentClasses out;
  out.k = component_count(g, n.omega);
  if (const auto* s = std::get_if<SigmaTildeSpec>(&spec)) {
    out.in_class_even = components_all_even(g, n.omega, s->B);
    out.cycles_even = true;
    out.k_marked = components_meeting(g, n.omega, s->A | s->B);
    if (out.in_class_even) out.sign = 1;
  } else if (const auto* s = std::get_if<PhiSpec>(&spec)) {
    out.in_class_even = components_all_even(g, n.omega, s->B1);
    out.cycles_even = true;
    out.k_marked = components_meeting(g, n.omega, s->a() | s->b());
  } else if (const auto* s = std::get_if<DisorderSpec>(&spec)) {
    require(reg != nullptr, Errc::SpecInvalid, "disorder classification needs a registry");
    EdgeMask gc = reg->gamma_mask(s->C), gd = reg->gamma_mask(s->D);
    out.in_class_even = components_all_even(g, n.omega, s->B);
    out.cycles_even = cycles_cross_evenly(g, n.omega, gc ^ gd);
    out.k_marked = components_meeting(g, n.omega, s->A | s->B);
    if (out.in_class_even && out.cycles_even)
      out.sign = current_sign(g, n, s->B, gc, gd);
  } else if (const auto* s = std::get_if<ChiSpec>(&spec)) {
    require(reg != nullptr, Errc::SpecInvalid, "chi classification needs a registry");
    std::vector<int> f1;
    VertexMask marked = 0;
    for (const Corner& c : s->undoubled()) f1.push_back(c.face);
    for (const Corner& c : s->all()) marked |= VertexMask{1} << c.vertex;
    EdgeMask gammaF1 = reg->gamma_mask(f1);
    out.cycles_even = cycles_cross_evenly(g, n.omega, gammaF1);
    out.k_marked = components_meeting(g, n.omega, marked);
    out.in_class_even = components_all_even(g, n.omega, marked);
    if (out.cycles_even) {
      out.null_flag = current_is_null(g, n, *s, *reg);
      if (!out.null_flag)
        out.sign = (std::popcount(n.eta & gammaF1) & 1) ? -1 : 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The oracle walker: iterates per-edge trits depth-first with an undoable
// union-find carrying component membership masks and one crossing-parity
// channel, so every class test at a leaf is a few mask operations.

namespace {

struct Walker {
  const Graph& g;
  int m = 0, n = 0;

  // scaled integer edge factors: absent L_e, even Y_e, odd X_e
  std::vector<BigInt> fl, fy, fx;

  // spec-dependent leaf configuration
  enum class Kind { SigmaTilde, Phi, Disorder, Chi } kind = Kind::SigmaTilde;
  VertexMask target = 0;       // required sources delta(eta)
  VertexMask class_even = 0;   // F-class marked set (SigmaTilde/Disorder)
  VertexMask side_a = 0, side_b = 0;  // Phi disconnection sides
  VertexMask marked = 0;       // k_marked set (Phi/Chi)
  EdgeMask gamma_chan = 0;     // parity channel: Gamma_{C^D} or Gamma_{F1}
  EdgeMask gamma_sign = 0;     // eta-intersection sign set: Gamma_C or Gamma_F1
  struct TWitness {
    VertexMask vt = 0;
    EdgeMask gamma_ft = 0;
    int tb_parity = 0;
  };
  std::vector<TWitness> witnesses;  // chi null tests (even T subsets)

  struct State {
    // undoable DSU
    std::array<int, kMaxVertices> parent{}, size{};
    std::array<std::uint8_t, kMaxVertices> pot{};  // channel parity to parent
    std::array<VertexMask, kMaxVertices> members{};
    int comps = 0, bad = 0;
    struct UndoRec {
      int child = -1, parent = -1;  // child < 0: odd-cycle record
      VertexMask old_members = 0;
    };
    std::vector<UndoRec> undo;

    VertexMask eta_parity = 0;
    int eta_sign_count = 0;  // |eta & gamma_sign|
    EdgeMask eta_mask = 0;
    std::vector<BigInt> prod;
    BigInt leaf_tmp;
    BigInt acc_num, acc_z;

    void init(int nverts, int medges) {
      for (int v = 0; v < nverts; ++v) {
        parent[v] = v;
        size[v] = 1;
        pot[v] = 0;
        members[v] = VertexMask{1} << v;
      }
      comps = nverts;
      bad = 0;
      undo.clear();
      undo.reserve(medges + 4);
      prod.assign(medges + 1, BigInt(0));
      prod[0] = 1;
      acc_num = 0;
      acc_z = 0;
    }

    int find(int v, std::uint8_t& par) const {
      par = 0;
      while (parent[v] != v) {
        par ^= pot[v];
        v = parent[v];
      }
      return v;
    }
    int find(int v) const {
      while (parent[v] != v) v = parent[v];
      return v;
    }

    std::size_t mark() const { return undo.size(); }

    void add_edge(int u, int v, std::uint8_t w) {
      std::uint8_t pu, pv;
      int ru = find(u, pu), rv = find(v, pv);
      if (ru == rv) {
        if ((pu ^ pv ^ w) & 1) {
          ++bad;
          undo.push_back({-1, -1, 0});
        } else {
          undo.push_back({-2, -1, 0});
        }
        return;
      }
      if (size[ru] > size[rv]) {
        std::swap(ru, rv);
        std::swap(pu, pv);
      }
      // attach ru under rv
      undo.push_back({ru, rv, members[rv]});
      parent[ru] = rv;
      pot[ru] = pu ^ pv ^ w;
      size[rv] += size[ru];
      members[rv] |= members[ru];
      --comps;
    }

    void rollback(std::size_t to) {
      while (undo.size() > to) {
        UndoRec r = undo.back();
        undo.pop_back();
        if (r.child == -1) {
          --bad;
        } else if (r.child == -2) {
          // closed an even cycle, nothing to restore
        } else {
          size[r.parent] -= size[r.child];
          members[r.parent] = r.old_members;
          parent[r.child] = r.child;
          pot[r.child] = 0;
          ++comps;
        }
      }
    }
  };

  Walker(const Graph& graph, const EdgeWeights& w) : g(graph) {
    m = g.edge_count();
    n = g.vertex_count();
    fl.resize(m);
    fy.resize(m);
    fx.resize(m);
    for (int e = 0; e < m; ++e) {
      BigInt dx = denominator(w.x[e]), dy = denominator(w.y[e]);
      BigInt L = lcm_big(dx, dy);
      fl[e] = L;
      fx[e] = numerator(w.x[e]) * (L / dx);
      fy[e] = numerator(w.y[e]) * (L / dy);
    }
  }

  void leaf(State& st) const {
    // sourceless partition accumulator
    if (st.eta_parity == 0) {
      st.leaf_tmp = st.prod[m] << st.comps;
      st.acc_z += st.leaf_tmp;
    }
    if (st.eta_parity != target) return;
    switch (kind) {
      case Kind::SigmaTilde: {
        if (!class_ok(st, class_even)) return;
        st.leaf_tmp = st.prod[m] << st.comps;
        st.acc_num += st.leaf_tmp;
        break;
      }
      case Kind::Phi: {
        int km = 0;
        if (!phi_ok(st, km)) return;
        st.leaf_tmp = st.prod[m] << (st.comps - km);
        st.acc_num += st.leaf_tmp;
        break;
      }
      case Kind::Disorder: {
        if (st.bad != 0) return;
        if (!class_ok(st, class_even)) return;
        int par = st.eta_sign_count;
        for (int v = 0; v < n; ++v)
          if (class_even >> v & 1u) {
            std::uint8_t p;
            st.find(v, p);
            par ^= p;
          }
        st.leaf_tmp = st.prod[m] << st.comps;
        if (par & 1)
          st.acc_num -= st.leaf_tmp;
        else
          st.acc_num += st.leaf_tmp;
        break;
      }
      case Kind::Chi: {
        if (st.bad != 0) return;
        for (const TWitness& tw : witnesses) {
          if (!class_ok(st, tw.vt)) continue;
          int par = tw.tb_parity + std::popcount(st.eta_mask & tw.gamma_ft);
          for (int v = 0; v < n; ++v)
            if (tw.vt >> v & 1u) {
              std::uint8_t p;
              st.find(v, p);
              par ^= p;
            }
          if (par & 1) return;  // null current
        }
        int km = count_marked(st);
        st.leaf_tmp = st.prod[m] << (st.comps - km);
        if (st.eta_sign_count & 1)
          st.acc_num -= st.leaf_tmp;
        else
          st.acc_num += st.leaf_tmp;
        break;
      }
    }
  }

  bool class_ok(const State& st, VertexMask set) const {
    if (set == 0) return true;
    for (int v = 0; v < n; ++v)
      if (st.parent[v] == v && (std::popcount(st.members[v] & set) & 1)) return false;
    return true;
  }

  bool phi_ok(const State& st, int& km) const {
    km = 0;
    for (int v = 0; v < n; ++v) {
      if (st.parent[v] != v) continue;
      VertexMask mem = st.members[v];
      if ((mem & side_a) && (mem & side_b)) return false;
      if (mem & marked) ++km;
    }
    return true;
  }

  int count_marked(const State& st) const {
    int km = 0;
    for (int v = 0; v < n; ++v)
      if (st.parent[v] == v && (st.members[v] & marked)) ++km;
    return km;
  }

  // apply one trit for edge e; returns false when the product vanished
  bool apply(State& st, int e, int trit) const {
    const BigInt& f = trit == 0 ? fl[e] : (trit == 1 ? fy[e] : fx[e]);
    BigInt& p = st.prod[e + 1];
    p = st.prod[e];
    p *= f;
    if (p.is_zero()) return false;
    if (trit != 0) st.add_edge(g.edge(e).u, g.edge(e).v, (gamma_chan >> e & 1u) ? 1 : 0);
    if (trit == 2) {
      st.eta_parity ^= g.ends_mask(e);
      st.eta_mask |= EdgeMask{1} << e;
      if (gamma_sign >> e & 1u) ++st.eta_sign_count;
    }
    return true;
  }

  void unapply(State& st, int e, int trit, std::size_t dsu_mark) const {
    if (trit == 2) {
      st.eta_parity ^= g.ends_mask(e);
      st.eta_mask &= ~(EdgeMask{1} << e);
      if (gamma_sign >> e & 1u) --st.eta_sign_count;
    }
    if (trit != 0) st.rollback(dsu_mark);
  }

  void dfs(State& st, int e) const {
    if (e == m) {
      leaf(st);
      return;
    }
    for (int trit = 0; trit < 3; ++trit) {
      std::size_t dm = st.mark();
      if (apply(st, e, trit)) dfs(st, e + 1);
      unapply(st, e, trit, dm);
    }
  }

  // full scan split into 3^depth prefix blocks for the worker pool
  std::pair<BigInt, BigInt> run(int workers) const {
    int depth = 0;
    std::size_t blocks = 1;
    while (workers > 1 && depth < m && blocks < static_cast<std::size_t>(workers) * 9) {
      blocks *= 3;
      ++depth;
    }
    auto partial =
        indexed_map<std::pair<BigInt, BigInt>>(blocks, workers, [&](std::size_t blk) {
          State st;
          st.init(n, m);
          // base-3 decode of the prefix trits, edge 0 most significant
          std::vector<int> trits(depth, 0);
          std::size_t rest = blk;
          for (int i = depth - 1; i >= 0; --i) {
            trits[i] = static_cast<int>(rest % 3);
            rest /= 3;
          }
          bool alive = true;
          for (int e = 0; e < depth && alive; ++e)
            if (!apply(st, e, trits[e])) alive = false;
          if (alive) dfs(st, depth);
          return std::make_pair(st.acc_num, st.acc_z);
        });
    BigInt num = 0, z = 0;
    for (auto& [pn, pz] : partial) {
      num += pn;
      z += pz;
    }
    return {num, z};
  }
};

}  // namespace

Rational CurrentOracle::eval(const CorrelatorSpec& spec, DualPathRegistry* registry) const {
  const Graph& g = *g_;
  require(g.edge_count() <= max_edges, Errc::TooLarge,
          "current oracle capped at " + std::to_string(max_edges) + " edges");
  validate_spec(g, spec);
  Walker w(g, *w_);

  if (const auto* s = std::get_if<SigmaTildeSpec>(&spec)) {
    w.kind = Walker::Kind::SigmaTilde;
    w.target = s->A ^ s->B;
    w.class_even = s->B;
    if (std::popcount(w.target) % 2 != 0) return 0;
  } else if (const auto* s = std::get_if<PhiSpec>(&spec)) {
    w.kind = Walker::Kind::Phi;
    w.target = s->A1 | s->B1;
    w.side_a = s->a();
    w.side_b = s->b();
    w.marked = s->a() | s->b();
    if (std::popcount(w.target) % 2 != 0) return 0;
  } else if (const auto* s = std::get_if<DisorderSpec>(&spec)) {
    require(registry != nullptr, Errc::SpecInvalid, "disorder spec needs a registry");
    w.kind = Walker::Kind::Disorder;
    w.target = s->A ^ s->B;
    w.class_even = s->B;
    EdgeMask gc = registry->gamma_mask(s->C), gd = registry->gamma_mask(s->D);
    w.gamma_chan = gc ^ gd;
    w.gamma_sign = gc;
    if (std::popcount(w.target) % 2 != 0) return 0;
  } else {
    const auto& cs = std::get<ChiSpec>(spec);
    require(registry != nullptr, Errc::SpecInvalid, "chi spec needs a registry");
    auto corners = cs.all();
    {
      std::vector<int> inner;
      for (const Corner& c : corners)
        if (c.face != g.outer_face()) inner.push_back(c.face);
      registry->require_edge_disjoint(inner);
    }
    w.kind = Walker::Kind::Chi;
    std::vector<int> f1;
    for (const Corner& c : cs.undoubled()) {
      w.target |= VertexMask{1} << c.vertex;
      f1.push_back(c.face);
    }
    for (const Corner& c : corners) w.marked |= VertexMask{1} << c.vertex;
    EdgeMask gammaF1 = registry->gamma_mask(f1);
    w.gamma_chan = gammaF1;
    w.gamma_sign = gammaF1;
    int mm = static_cast<int>(corners.size());
    for (std::uint32_t sel = 1; sel < (1u << mm); ++sel) {
      if (std::popcount(sel) % 2 != 0) continue;
      Walker::TWitness tw;
      std::vector<int> ft;
      for (int i = 0; i < mm; ++i)
        if (sel >> i & 1u) {
          tw.vt |= VertexMask{1} << corners[i].vertex;
          ft.push_back(corners[i].face);
          if (cs.is_b(corners[i])) tw.tb_parity ^= 1;
        }
      tw.gamma_ft = registry->gamma_mask(ft);
      w.witnesses.push_back(tw);
    }
    if (std::popcount(w.target) % 2 != 0) return 0;
  }

  auto [num, z] = w.run(workers);
  return Rational(num, z);
}

Rational CurrentOracle::sourceless_sum() const {
  const Graph& g = *g_;
  require(g.edge_count() <= max_edges, Errc::TooLarge, "current oracle cap exceeded");
  Walker w(g, *w_);
  w.kind = Walker::Kind::SigmaTilde;
  w.target = 0;
  auto [num, z] = w.run(workers);
  (void)num;
  BigInt scale = 1;
  for (int e = 0; e < g.edge_count(); ++e) scale *= w.fl[e];
  return Rational(z, scale);
}

double CurrentOracle::enumeration_rate() const {
  const Graph& g = *g_;
  Walker w(g, *w_);
  w.kind = Walker::Kind::SigmaTilde;
  w.target = 0;
  auto t0 = std::chrono::steady_clock::now();
  w.run(1);
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  double total = std::pow(3.0, g.edge_count());
  return total / std::max(secs, 1e-9);
}

}  // namespace atlab
