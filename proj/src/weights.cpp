#include "atlab/weights.hpp"

#include <algorithm>

namespace atlab {

EdgeWeights weights_from_spec(const Graph& g, const GraphSpec& spec) {
  EdgeWeights w;
  w.x.assign(g.edge_count(), Rational(0));
  w.y.assign(g.edge_count(), Rational(0));
  for (const auto& e : spec.edges) {
    int idx = g.edge_index(e.id);
    if (e.x || e.y) {
      require(e.x && e.y && !e.J && !e.U, Errc::BadInput,
              "edge " + std::to_string(e.id) + ": give either (x,y) or (J,U), not a mix");
      w.x[idx] = *e.x;
      w.y[idx] = *e.y;
    } else if (e.J || e.U) {
      require(e.J && e.U, Errc::BadInput,
              "edge " + std::to_string(e.id) + ": J and U must be given together");
      XYPair p = weights_from_couplings(*e.J, *e.U);
      w.x[idx] = rational_from_double(p.x);
      w.y[idx] = rational_from_double(p.y);
    } else {
      fail(Errc::BadInput, "edge " + std::to_string(e.id) + " carries no weights");
    }
  }
  return w;
}

}  // namespace atlab
