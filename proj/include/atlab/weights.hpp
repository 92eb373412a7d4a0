#pragma once

#include <cmath>
#include <vector>

#include "atlab/graph.hpp"
#include "atlab/rational.hpp"

namespace atlab {

/// Per-edge weight pair (x, y), exact rationals.
struct EdgeWeights {
  std::vector<Rational> x, y;

  static EdgeWeights uniform(const Graph& g, Rational xv, Rational yv) {
    EdgeWeights w;
    w.x.assign(g.edge_count(), xv);
    w.y.assign(g.edge_count(), yv);
    return w;
  }
};

struct XYPair {
  double x, y;
};
struct JUPair {
  double J, U;
};

/// x = e^{2U} sinh(2J),  y = e^{2U} cosh(2J) - 1.
inline XYPair weights_from_couplings(double J, double U) {
  return {std::exp(2 * U) * std::sinh(2 * J), std::exp(2 * U) * std::cosh(2 * J) - 1};
}

/// Inverse map; defined only where (y+1)^2 - x^2 > 0.
inline JUPair couplings_from_weights(double x, double y) {
  double d = (y + 1) * (y + 1) - x * x;
  require(d > 0, Errc::InverseUndefined, "(y+1)^2 - x^2 must be positive");
  double U = std::log(d) / 4;
  double J = std::atanh(x / (y + 1)) / 2;
  return {J, U};
}

/// Weights for a parsed graph spec: "x"/"y" entries are taken verbatim,
/// (J, U) entries are mapped through the coupling formulas and then
/// rationalized exactly (a double is a binary rational, so all identity
/// checks downstream remain exact at the rationalized point).
EdgeWeights weights_from_spec(const Graph& g, const GraphSpec& spec);

/// Per-edge disorder signs epsilon (sigma layer) and epsilon-tilde
/// (sigma-tilde layer): -1 exactly on the given crossed-edge sets.
struct DisorderSigns {
  EdgeMask flip_sigma = 0;   // edges of Gamma_C
  EdgeMask flip_tilde = 0;   // edges of Gamma_D
};

/// The algebraic Gibbs factor of one edge,
///   1 + 1{eps*eps~*tau_u*tau_v = 1} (x*eps*sigma_u*sigma_v + y),
/// which equals exp(J(eps s s' + eps~ t t') + U(eps eps~ s s' t t' + 1)).
inline Rational edge_factor(const Rational& x, const Rational& y, int sus, int svs, int tus,
                            int tvs, int eps, int eps_tilde) {
  int tau = sus * svs * tus * tvs;
  if (eps * eps_tilde * tau != 1) return 1;
  return 1 + x * (eps * sus * svs) + y;
}

/// Float twin of edge_factor used to validate the algebraic form against
/// the exponential Gibbs weight.
inline double edge_factor_float(double J, double U, int sus, int svs, int tus, int tvs, int eps,
                                int eps_tilde) {
  return std::exp(J * (eps * sus * svs + eps_tilde * tus * tvs) +
                  U * (eps * eps_tilde * sus * svs * tus * tvs + 1));
}

}  // namespace atlab
