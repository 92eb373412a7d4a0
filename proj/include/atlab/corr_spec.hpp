#pragma once

#include <string>
#include <variant>
#include <vector>

#include "atlab/dual.hpp"
#include "atlab/graph.hpp"

namespace atlab {

/// <sigma_A sigma~_B>
struct SigmaTildeSpec {
  VertexMask A = 0, B = 0;
};

/// <phi_{A1} phi^2_{A2} phi~_{B1} phi~^2_{B2}>, sets pairwise disjoint.
struct PhiSpec {
  VertexMask A1 = 0, A2 = 0, B1 = 0, B2 = 0;
  VertexMask a() const { return A1 | A2; }
  VertexMask b() const { return B1 | B2; }
};

/// <sigma_A sigma~_B mu_C mu~_D>; C and D are face sets whose dual paths
/// come from the session registry.
struct DisorderSpec {
  VertexMask A = 0, B = 0;
  std::vector<int> C, D;
};

/// <chi_{A1} chi^2_{A2} chi~_{B1} chi~^2_{B2}> over corners. All corner
/// vertices are distinct, inner faces are distinct, and the dual paths of
/// the inner faces must be pairwise edge-disjoint.
struct ChiSpec {
  std::vector<Corner> A1, A2, B1, B2;
  std::vector<Corner> all() const;
  std::vector<Corner> undoubled() const;  // A1 u B1
  bool is_b(const Corner& c) const;
};

using CorrelatorSpec = std::variant<SigmaTildeSpec, PhiSpec, DisorderSpec, ChiSpec>;

/// Throws SpecInvalid on overlap/parity problems that make a spec
/// meaningless regardless of graph size.
void validate_spec(const Graph& g, const CorrelatorSpec& spec);

/// JSON form mirrors the variant: {"type":"sigma_tilde","A":[..],"B":[..]},
/// {"type":"phi","A1":..}, {"type":"disorder",..,"C":[faces]},
/// {"type":"chi","A1":[[vertex,face],..],..}. Vertices are labels, faces
/// are derived face ids.
CorrelatorSpec spec_from_json(const Graph& g, const std::string& text);
std::string spec_to_json(const Graph& g, const CorrelatorSpec& spec);

VertexMask mask_of_labels(const Graph& g, const std::vector<int>& labels);
std::vector<int> labels_of_mask(const Graph& g, VertexMask m);

}  // namespace atlab
