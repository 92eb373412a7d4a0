#pragma once

#include <functional>
#include <span>
#include <vector>

#include "atlab/corr_spec.hpp"
#include "atlab/weights.hpp"

namespace atlab {

/// A current: eta (odd edges) inside omega (open edges).
struct Current {
  EdgeMask omega = 0, eta = 0;
  bool operator==(const Current&) const = default;
};

/// Enumeration cap; ATLAB_MAX_EDGES overrides the default of 14.
int default_max_edges();

VertexMask current_sources(const Graph& g, EdgeMask eta);

/// Streams every (omega, eta) with the given sources exactly once, in
/// per-edge trit order (absent, even, odd). Empty for odd-size source sets.
void for_each_current(const Graph& g, VertexMask sources,
                      const std::function<void(Current)>& fn, int max_edges = -1);
std::vector<Current> enumerate_currents(const Graph& g, VertexMask sources, int max_edges = -1);

/// 2^{k(omega)} prod_{eta} x_e prod_{omega\eta} y_e, components counted
/// with isolated vertices.
Rational current_weight(const Graph& g, Current n, const EdgeWeights& w);

int component_count(const Graph& g, EdgeMask omega);
int components_meeting(const Graph& g, EdgeMask omega, VertexMask marked);
/// Every component of (V, omega) contains an even number of marked vertices.
bool components_all_even(const Graph& g, EdgeMask omega, VertexMask marked);
bool connects(const Graph& g, EdgeMask omega, VertexMask a, VertexMask b);

/// Sign of a current with respect to insertion set B and disorder lines
/// Gamma_C, Gamma_D. The pairing paths come from a spanning forest built by
/// scanning omega's edges in `edge_order`; any order yields the same sign.
/// Preconditions (PreconditionViolated): omega in F_B and omega in
/// F*_{C xor D}.
int current_sign(const Graph& g, Current n, VertexMask B, EdgeMask gammaC, EdgeMask gammaD,
                 std::span<const int> edge_order = {});

/// Cancellation witness test for a chi correlator: true iff some even
/// corner subset T has omega in F_{V(T)} with
/// |T cap B| + |eta cap Gamma_{F(T)}| + |rho_{V(T)} cap Gamma_{F1}| odd.
bool current_is_null(const Graph& g, Current n, const ChiSpec& spec, DualPathRegistry& reg,
                     std::span<const int> edge_order = {});

struct CurrentClasses {
  bool in_class_even = false;  // omega in F_B (or F_{V(T)} context for chi)
  bool cycles_even = false;    // omega in the relevant F*
  int k = 0;
  int k_marked = 0;
  int sign = 0;  // 0 when undefined for the spec
  bool null_flag = false;
};
CurrentClasses classify_current(const Graph& g, Current n, const CorrelatorSpec& spec,
                                DualPathRegistry* reg = nullptr);

/// Exact correlator evaluation by streaming the full trit space once per
/// call and accumulating integer-scaled weights.
class CurrentOracle {
 public:
  CurrentOracle(const Graph& g, const EdgeWeights& w)
      : g_(&g), w_(&w), max_edges(default_max_edges()) {}

  int max_edges;
  int workers = 1;

  Rational eval(const CorrelatorSpec& spec, DualPathRegistry* registry = nullptr) const;

  /// Exact sourceless partition sum Z_empty.
  Rational sourceless_sum() const;

  /// Currents per second over one full sourceless sweep (single worker).
  double enumeration_rate() const;

 private:
  const Graph* g_;
  const EdgeWeights* w_;
};

}  // namespace atlab
