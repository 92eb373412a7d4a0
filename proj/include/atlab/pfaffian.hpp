#pragma once

#include <functional>
#include <vector>

#include "atlab/nodes.hpp"
#include "atlab/rational.hpp"

namespace atlab {

/// Chord-diagram crossing count of a pairing of integer positions.
int crossing_number(const NodePairing& p);

/// Symmetric two-point table over a node sequence; entries between the two
/// copies of a doubled node are forced to 1 (the projected square).
struct TwoPointTable {
  int n = 0;
  std::vector<Rational> t;  // row-major n*n, symmetric, unit diagonal
  const Rational& operator()(int i, int j) const { return t[i * n + j]; }

  static TwoPointTable from_function(const NodeSequence& seq,
                                     const std::function<Rational(const Node&, const Node&)>& f);
};

/// Antisymmetric node matrix K with K[i][j] = +t(i,j) for i < j.
struct AntisymMatrix {
  int n = 0;
  std::vector<Rational> a;
  const Rational& operator()(int i, int j) const { return a[i * n + j]; }
};

AntisymMatrix build_antisym(const TwoPointTable& t);
AntisymMatrix restrict_antisym(const AntisymMatrix& k, const std::vector<int>& idx);

/// Rectangular matrix with explicit row/column node indices.
struct RectMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;
  Rational& at(int i, int j) { return a[i * cols + j]; }
  const Rational& at(int i, int j) const { return a[i * cols + j]; }
};

/// Source/sink matrix: rows = sources in node order, columns = sinks in
/// node order, entry (u,v) = (-1)^{#sources strictly between} t(u,v).
/// Only defined for balanced colorings.
RectMatrix build_source_sink(const NodeSequence& seq, const Coloring& c, const TwoPointTable& t);

/// Pairing sum with crossing signs (dim <= 10 guard; used as the oracle
/// side of the elimination methods).
Rational pfaffian_combinatorial(const AntisymMatrix& k);
/// Fraction-free elimination on the integer-cleared matrix.
Rational pfaffian_elimination(const AntisymMatrix& k);
/// Combinatorial for dim <= 8, elimination beyond. OddDimension on odd n.
Rational pfaffian(const AntisymMatrix& k);

Rational determinant(const RectMatrix& m);  // Bareiss; NotSquare guard
/// Bipartite pairing sum per the source/sink crossing-sign expansion.
Rational determinant_combinatorial(const RectMatrix& m, const std::vector<int>& row_nodes,
                                   const std::vector<int>& col_nodes,
                                   const TwoPointTable& t);

/// Both sides of the concatenation sign relation
///   (-1)^{xg(p u p')} = (-1)^{xg(p)+xg(p')-|S|/2-|S cap evens|}
/// for a pairing p of S and p' of the complement, with |N| = n_total.
std::pair<int, int> concat_sign_relation(const std::vector<int>& s_nodes, const NodePairing& p,
                                         const NodePairing& pc, int n_total);

/// Both sides of the pfaffian convolution identity for a coloring:
/// sum_S (-1)^{|S cap B|} pf(K^S) pf(K^{N\S}) against
/// 2^{|N|/2} det(source/sink matrix) when balanced, 0 otherwise.
struct PfDetReport {
  Rational lhs, rhs;
  bool balanced = false;
  bool holds = false;
};
PfDetReport pf_det_identity(const TwoPointTable& t, const NodeSequence& seq, const Coloring& c);

void for_each_pairing(int n, const std::function<void(const NodePairing&)>& fn);
void for_each_pairing_of(const std::vector<int>& elems,
                         const std::function<void(const NodePairing&)>& fn);
void for_each_bipartite_pairing(const std::vector<int>& rows, const std::vector<int>& cols,
                                const std::function<void(const NodePairing&)>& fn);

}  // namespace atlab
