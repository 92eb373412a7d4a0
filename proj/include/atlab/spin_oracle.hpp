#pragma once

#include <utility>
#include <vector>

#include "atlab/corr_spec.hpp"
#include "atlab/weights.hpp"

namespace atlab {

/// Exact correlator evaluation by direct summation over all 4^|V| spin
/// configurations, using the algebraic edge factor so every value is a
/// rational in the edge weights.
class SpinOracle {
 public:
  SpinOracle(const Graph& g, const EdgeWeights& w) : g_(&g), w_(&w) {}

  int max_vertices = 12;
  int workers = 1;

  /// Disorder and chi specs need the session dual-path registry.
  Rational eval(const CorrelatorSpec& spec, DualPathRegistry* registry = nullptr) const;

  /// Many <sigma_A sigma~_B> values from a single sweep.
  std::vector<Rational> sigma_batch(
      const std::vector<std::pair<VertexMask, VertexMask>>& obs) const;

  Rational two_point(int u, int v) const {
    return sigma_batch({{(VertexMask{1} << u) | (VertexMask{1} << v), 0}})[0];
  }

  /// The exact partition sum (with the +1 shift in the four-body term).
  Rational partition_function() const;

 private:
  const Graph* g_;
  const EdgeWeights* w_;
};

}  // namespace atlab
