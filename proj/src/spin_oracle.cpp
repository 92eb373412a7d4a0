#include "atlab/spin_oracle.hpp"

#include <array>
#include <bit>

#include "atlab/parallel.hpp"

namespace atlab {

namespace {

// Spin states per vertex: bit 0 set means sigma = -1, bit 1 set means
// sigma~ = -1.
inline int sig(int s) { return (s & 1) ? -1 : 1; }
inline int til(int s) { return (s & 2) ? -1 : 1; }

struct PhiSite {
  int v;
  int kind;  // 0 phi, 1 phi^2, 2 phi~, 3 phi~^2
};

struct Engine {
  const Graph& g;
  int n;
  std::vector<std::array<BigInt, 16>> table;            // per edge, index su*4+sv
  std::vector<BigInt> Ls;                               // per-edge clearing factor
  std::vector<std::vector<std::pair<int, int>>> back;   // per vertex: (edge, earlier endpoint)
  std::vector<std::pair<VertexMask, VertexMask>> sigma_obs;
  bool has_phi = false;
  std::vector<PhiSite> phi_sites;
  bool want_partition = true;

  Engine(const Graph& graph, const EdgeWeights& w, DisorderSigns eps = {}) : g(graph) {
    n = g.vertex_count();
    back.assign(n, {});
    table.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      int u = g.edge(e).u, v = g.edge(e).v;
      back[std::max(u, v)].push_back({e, std::min(u, v)});
      BigInt dx = denominator(w.x[e]), dy = denominator(w.y[e]);
      BigInt L = lcm_big(dx, dy);
      Ls.push_back(L);
      BigInt X = numerator(w.x[e]) * (L / dx);
      BigInt Y = numerator(w.y[e]) * (L / dy);
      int ep = (eps.flip_sigma >> e & 1u) ? -1 : 1;
      int et = (eps.flip_tilde >> e & 1u) ? -1 : 1;
      for (int su = 0; su < 4; ++su)
        for (int sv = 0; sv < 4; ++sv) {
          int ss = sig(su) * sig(sv), tt = til(su) * til(sv);
          BigInt f = L;
          if (ep * et * ss * tt == 1) f += X * (ep * ss) + Y;
          table[e][su * 4 + sv] = f;
        }
    }
  }

  BigInt scale() const {
    BigInt s = 1;
    for (const BigInt& L : Ls) s *= L;
    return s;
  }

  int obs_count() const {
    return static_cast<int>(sigma_obs.size()) + (has_phi ? 1 : 0) + (want_partition ? 1 : 0);
  }

  struct Ctx {
    const Engine& en;
    std::array<int, kMaxVertices> state{};
    VertexMask negs = 0, negt = 0;
    std::vector<BigInt> prod;
    std::vector<BigInt> acc;

    explicit Ctx(const Engine& e) : en(e), prod(e.n + 1), acc(e.obs_count(), BigInt(0)) {
      prod[0] = 1;
    }

    void set_state(int v, int s) {
      state[v] = s;
      VertexMask bit = VertexMask{1} << v;
      negs = (negs & ~bit) | ((s & 1) ? bit : 0);
      negt = (negt & ~bit) | ((s & 2) ? bit : 0);
    }

    // multiply the factors of edges from v to earlier vertices; false if zero
    bool extend(int v) {
      BigInt& p = prod[v + 1];
      p = prod[v];
      for (auto [e, u] : en.back[v]) {
        p *= en.table[e][state[v] * 4 + state[u]];
        if (p.is_zero()) return false;
      }
      return true;
    }

    void leaf() {
      const BigInt& p = prod[en.n];
      std::size_t k = 0;
      for (auto [A, B] : en.sigma_obs) {
        int par = (std::popcount(negs & A) + std::popcount(negt & B)) & 1;
        if (par)
          acc[k] -= p;
        else
          acc[k] += p;
        ++k;
      }
      if (en.has_phi) {
        int val = 1;
        for (const PhiSite& s : en.phi_sites) {
          int a = sig(state[s.v]), b = til(state[s.v]);
          int phi = (a + b) / 2, pt = (a - b) / 2;
          switch (s.kind) {
            case 0: val *= phi; break;
            case 1: val *= phi * phi; break;
            case 2: val *= pt; break;
            case 3: val *= pt * pt; break;
          }
          if (val == 0) break;
        }
        if (val > 0)
          acc[k] += p;
        else if (val < 0)
          acc[k] -= p;
        ++k;
      }
      if (en.want_partition) acc[k] += p;
    }

    void dfs(int v) {
      if (v == en.n) {
        leaf();
        return;
      }
      for (int s = 0; s < 4; ++s) {
        set_state(v, s);
        if (extend(v)) dfs(v + 1);
      }
    }
  };

  /// Accumulated integer sums per observable (scaled by prod of L_e).
  std::vector<BigInt> run(int workers) const {
    int depth = 0;
    std::size_t blocks = 1;
    while (workers > 1 && depth < n && blocks < static_cast<std::size_t>(workers) * 8) {
      blocks *= 4;
      ++depth;
    }
    auto partial = indexed_map<std::vector<BigInt>>(blocks, workers, [&](std::size_t blk) {
      Ctx ctx(*this);
      for (int v = 0; v < depth; ++v) {
        int s = static_cast<int>(blk >> (2 * (depth - 1 - v))) & 3;
        ctx.set_state(v, s);
        if (!ctx.extend(v)) return std::move(ctx.acc);  // dead prefix
      }
      ctx.dfs(depth);
      return std::move(ctx.acc);
    });
    std::vector<BigInt> total(obs_count(), BigInt(0));
    for (const auto& part : partial)
      for (std::size_t k = 0; k < total.size(); ++k) total[k] += part[k];
    return total;
  }
};

}  // namespace

Rational SpinOracle::eval(const CorrelatorSpec& spec, DualPathRegistry* registry) const {
  const Graph& g = *g_;
  require(g.vertex_count() <= max_vertices, Errc::TooLarge,
          "spin oracle capped at " + std::to_string(max_vertices) + " vertices");
  validate_spec(g, spec);

  if (const auto* s = std::get_if<SigmaTildeSpec>(&spec)) {
    Engine en(g, *w_);
    en.sigma_obs = {{s->A, s->B}};
    auto sums = en.run(workers);
    return Rational(sums[0], sums[1]);
  }

  if (const auto* s = std::get_if<PhiSpec>(&spec)) {
    Engine en(g, *w_);
    en.has_phi = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (s->A1 >> v & 1u) en.phi_sites.push_back({v, 0});
      if (s->A2 >> v & 1u) en.phi_sites.push_back({v, 1});
      if (s->B1 >> v & 1u) en.phi_sites.push_back({v, 2});
      if (s->B2 >> v & 1u) en.phi_sites.push_back({v, 3});
    }
    auto sums = en.run(workers);
    return Rational(sums[0], sums[1]);
  }

  if (const auto* s = std::get_if<DisorderSpec>(&spec)) {
    require(registry != nullptr, Errc::SpecInvalid, "disorder spec needs a dual-path registry");
    DisorderSigns eps{registry->gamma_mask(s->C), registry->gamma_mask(s->D)};
    Engine num(g, *w_, eps);
    num.sigma_obs = {{s->A, s->B}};
    num.want_partition = false;
    auto nsum = num.run(workers);
    Engine den(g, *w_);
    auto dsum = den.run(workers);
    return Rational(nsum[0], dsum[0]);
  }

  const auto& s = std::get<ChiSpec>(spec);
  require(registry != nullptr, Errc::SpecInvalid, "chi spec needs a dual-path registry");
  auto corners = s.all();
  {
    std::vector<int> inner;
    for (const Corner& c : corners)
      if (c.face != g.outer_face()) inner.push_back(c.face);
    registry->require_edge_disjoint(inner);
  }
  auto undoubled = s.undoubled();
  int m = static_cast<int>(corners.size());

  // chi insertions expand into psi correlators over even corner subsets S:
  //   2^{-m} sum_S (-1)^{|S cap B|} <psi_{U  xor S} psi~_S>
  // with U the undoubled corners; each term is an order-disorder correlator.
  BigInt numerator_total = 0;
  Engine den(g, *w_);
  auto dsum = den.run(workers);
  for (std::uint32_t sel = 0; sel < (1u << m); ++sel) {
    if (std::popcount(sel) % 2 != 0) continue;
    std::vector<Corner> S;
    int s_cap_b = 0;
    for (int i = 0; i < m; ++i)
      if (sel >> i & 1u) {
        S.push_back(corners[i]);
        if (s.is_b(corners[i])) ++s_cap_b;
      }
    // T1 = undoubled xor S
    std::vector<Corner> T1;
    for (const Corner& c : undoubled)
      if (std::find(S.begin(), S.end(), c) == S.end()) T1.push_back(c);
    for (const Corner& c : S)
      if (std::find(undoubled.begin(), undoubled.end(), c) == undoubled.end()) T1.push_back(c);

    VertexMask A = 0, B = 0;
    std::vector<int> C, D;
    for (const Corner& c : T1) {
      A |= VertexMask{1} << c.vertex;
      C.push_back(c.face);
    }
    for (const Corner& c : S) {
      B |= VertexMask{1} << c.vertex;
      D.push_back(c.face);
    }
    DisorderSigns eps{registry->gamma_mask(C), registry->gamma_mask(D)};
    Engine num(g, *w_, eps);
    num.sigma_obs = {{A, B}};
    num.want_partition = false;
    auto nsum = num.run(workers);
    if (s_cap_b % 2 == 0)
      numerator_total += nsum[0];
    else
      numerator_total -= nsum[0];
  }
  return Rational(numerator_total, dsum[0] << m);
}

std::vector<Rational> SpinOracle::sigma_batch(
    const std::vector<std::pair<VertexMask, VertexMask>>& obs) const {
  const Graph& g = *g_;
  require(g.vertex_count() <= max_vertices, Errc::TooLarge, "spin oracle cap exceeded");
  Engine en(g, *w_);
  en.sigma_obs = obs;
  auto sums = en.run(workers);
  BigInt z = sums.back();
  std::vector<Rational> out;
  out.reserve(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) out.emplace_back(sums[i], z);
  return out;
}

Rational SpinOracle::partition_function() const {
  const Graph& g = *g_;
  require(g.vertex_count() <= max_vertices, Errc::TooLarge, "spin oracle cap exceeded");
  Engine en(g, *w_);
  auto sums = en.run(workers);
  return Rational(sums[0], en.scale());
}

}  // namespace atlab
