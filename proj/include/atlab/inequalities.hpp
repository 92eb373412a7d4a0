#pragma once

#include <vector>

#include "atlab/spin_oracle.hpp"
#include "atlab/weights.hpp"

namespace atlab {

/// Region flags over all edges of a weight assignment:
///   nonneg:       x >= 0 and y >= 0                 (real couplings, J >= 0)
///   simon_region: nonneg and (y+1)^2 - x^2 <= 1     (additionally U <= 0)
///   u_zero:       (y+1)^2 - x^2 = 1                 (decoupled pair)
struct WeightRegion {
  bool nonneg = true;
  bool simon_region = true;
  bool u_zero = true;
};

WeightRegion region_check(const EdgeWeights& w);

/// One inequality evaluation: both exact sides and the verdict.
struct IneqResult {
  Rational lhs, rhs;
  bool holds = false;
};

/// <sigma_A sigma_B> >= <sigma_A sigma~_B>; needs the nonneg region.
IneqResult check_griffiths_pair(const Graph& g, const EdgeWeights& w, VertexMask A, VertexMask B,
                                int workers = 1);

/// <s_u s_w><s_w s_v> >= <s_u s_w s~_w s~_v>; needs the simon region.
IneqResult check_negative_association(const Graph& g, const EdgeWeights& w, int u, int v, int wv,
                                      int workers = 1);

/// <s_u s_v> <= sum_{w in W} <s_u s_w><s_w s_v> for a separating W.
IneqResult check_simon(const Graph& g, const EdgeWeights& w, int u, int v,
                       const std::vector<int>& separator, int workers = 1);

/// <sigma_S> <= sum over pairings of two-point products; |S| even.
IneqResult check_gaussian(const Graph& g, const EdgeWeights& w, VertexMask S, int workers = 1);

bool is_separator(const Graph& g, int u, int v, const std::vector<int>& W);

}  // namespace atlab
