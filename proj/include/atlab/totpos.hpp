#pragma once

#include <vector>

#include "atlab/pfaffian.hpp"
#include "atlab/spin_oracle.hpp"

namespace atlab {

/// Vertex-disjoint paths pairing the sources with the sinks (any bijection).
bool disjoint_paths_exhaustive(const Graph& g, const std::vector<int>& sources,
                               const std::vector<int>& sinks);
bool disjoint_paths_maxflow(const Graph& g, const std::vector<int>& sources,
                            const std::vector<int>& sinks);
/// Exhaustive search for k <= 3, vertex-capacity max flow beyond.
bool disjoint_paths_exist(const Graph& g, const std::vector<int>& sources,
                          const std::vector<int>& sinks);

struct MinorRecord {
  std::vector<int> rows, cols;  // indices into the pattern, ascending
  Rational det;
  bool paths_exist = false;
  bool consistent = false;  // det >= 0 and (det > 0 <=> paths_exist)
};

struct TotPosReport {
  RectMatrix m;                      // boundary two-point matrix
  std::vector<MinorRecord> minors;   // every I, I' pair, sizes 1..n
  bool all_nonneg = true;
  bool all_consistent = true;
};

/// Builds M[i][j] = <sigma_{s_i} sigma_{t_j}> for a counterclockwise
/// parallel source/sink pattern and scans every minor, checking sign
/// against vertex-disjoint path existence. Pattern size capped at 6.
TotPosReport total_positivity_scan(const Graph& g, const EdgeWeights& w,
                                   const std::vector<int>& sources,
                                   const std::vector<int>& sinks, int workers = 1);

}  // namespace atlab
