#pragma once

#include <string>

#include "atlab/graph.hpp"

namespace atlab {

struct FamilyParams {
  int n = 0;          // path/cycle/complete size
  int rows = 0, cols = 0;  // grid
  Rational x = Rational(1, 2), y = Rational(1, 3);
};

/// Families: "path", "cycle", "grid", "complete", "theta", "c4chord".
/// Planar families carry a rotation system and outer walk; K5 is emitted
/// without an embedding and is only usable by the non-planar suites.
GraphSpec generate_graph(const std::string& family, const FamilyParams& params);

/// The seven-graph default family the verification suites sweep:
/// path3, path4, cycle4, cycle6, theta, grid 2x3, complete4.
std::vector<std::pair<std::string, GraphSpec>> default_family();

}  // namespace atlab
