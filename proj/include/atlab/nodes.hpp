#pragma once

#include <optional>
#include <vector>

#include "atlab/corr_spec.hpp"
#include "atlab/dual.hpp"
#include "atlab/graph.hpp"

namespace atlab {

/// One node of a boundary (or corner) sequence. Doubled insertions emit two
/// adjacent copies, '<' before '>'.
struct Node {
  int vertex = -1;
  int face = -1;  // >= 0 for corner nodes
  int copy = 0;   // 0 plain, 1 the '<' copy, 2 the '>' copy
  bool operator==(const Node&) const = default;
};

/// Counterclockwise node order anchored at the lowest-label boundary
/// vertex; 1-based positions split into odd and even parity classes.
struct NodeSequence {
  std::vector<Node> nodes;
  int size() const { return static_cast<int>(nodes.size()); }
  /// true when 1-based position of node i is odd
  bool odd_class(int i) const { return i % 2 == 0; }
};

/// Blue/red labels per node plus the derived source/sink split:
/// sources = (odd & blue) | (even & red).
struct Coloring {
  std::vector<bool> blue;
  std::vector<int> sources, sinks;  // node indices in sequence order
};

Coloring make_coloring(const NodeSequence& seq, const std::vector<bool>& blue);

/// Abstract sequence of n plain nodes (for coloring sweeps that need no
/// graph).
NodeSequence abstract_sequence(int n);

/// Sequence and coloring for a phi correlator; insertion vertices must lie
/// on the outer face.
std::pair<NodeSequence, Coloring> build_node_sequence(const Graph& g, const PhiSpec& spec);

/// Corner variant: order induced by deleting the registered dual paths.
std::pair<NodeSequence, Coloring> build_corner_sequence(const Graph& g, const ChiSpec& spec,
                                                        DualPathRegistry& reg);

bool is_balanced(const Coloring& c);

/// Perfect matching of node positions, used both as the planar-pairing
/// witness and as the pfaffian pairing type.
struct NodePairing {
  std::vector<std::pair<int, int>> pairs;
};

/// Greedy construction from adjacent source/sink pairs; yields a planar
/// pairing compatible with the coloring exactly when one exists.
std::optional<NodePairing> planar_pairing_witness(const NodeSequence& seq, const Coloring& c);

/// Whether the coloring admits a compatible even planar partition.
/// Equivalent to is_balanced; kept as an independent code path.
bool is_realizable(const NodeSequence& seq, const Coloring& c);

/// The coloring (on an existing sequence) whose sources are s_1..s_n and
/// sinks t_n..t_1 in counterclockwise order: pairs (s_i, t_i) are blue for
/// odd i. Returns nullopt when the sequence/coloring is not of that shape.
struct ParallelPattern {
  std::vector<int> source_nodes, sink_nodes;  // node indices, s_1..s_n then t_1..t_n
};
std::optional<ParallelPattern> parallel_pattern_of(const NodeSequence& seq, const Coloring& c);

/// omega membership in the parallel connectivity class: s_i ~ t_i for all
/// i, s_i !~ t_j for i != j, and every component holds evenly many nodes.
/// PatternMismatch when the coloring is not the parallel pattern.
bool parallel_pattern_check(const Graph& g, EdgeMask omega, const NodeSequence& seq,
                            const Coloring& c);

/// The (undoubled) phi spec whose derived sources are exactly s_1..s_n and
/// sinks t_1..t_n, given that s_1,..,s_n,t_n,..,t_1 is a counterclockwise
/// boundary order (PatternMismatch otherwise). Vertices are internal
/// indices.
PhiSpec phi_spec_for_pattern(const Graph& g, const std::vector<int>& sources,
                             const std::vector<int>& sinks);

/// Sequence s_1..s_n,t_n..t_1 anchored at s_1 with its forced coloring.
std::pair<NodeSequence, Coloring> sequence_for_pattern(const Graph& g,
                                                       const std::vector<int>& sources,
                                                       const std::vector<int>& sinks);

}  // namespace atlab
