#include "atlab/corr_spec.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <json.hpp>

namespace atlab {

std::vector<Corner> ChiSpec::all() const {
  std::vector<Corner> out;
  for (const auto* s : {&A1, &A2, &B1, &B2}) out.insert(out.end(), s->begin(), s->end());
  return out;
}

std::vector<Corner> ChiSpec::undoubled() const {
  std::vector<Corner> out(A1);
  out.insert(out.end(), B1.begin(), B1.end());
  return out;
}

bool ChiSpec::is_b(const Corner& c) const {
  return std::find(B1.begin(), B1.end(), c) != B1.end() ||
         std::find(B2.begin(), B2.end(), c) != B2.end();
}

void validate_spec(const Graph& g, const CorrelatorSpec& spec) {
  VertexMask all = g.vertex_count() >= 32 ? ~VertexMask{0}
                                          : (VertexMask{1} << g.vertex_count()) - 1;
  auto in_range = [&](VertexMask m) {
    require((m & ~all) == 0, Errc::SpecInvalid, "vertex set out of range");
  };
  if (const auto* s = std::get_if<SigmaTildeSpec>(&spec)) {
    in_range(s->A);
    in_range(s->B);
  } else if (const auto* s = std::get_if<PhiSpec>(&spec)) {
    for (VertexMask m : {s->A1, s->A2, s->B1, s->B2}) in_range(m);
    require((s->A1 & s->A2) == 0 && ((s->A1 | s->A2) & (s->B1 | s->B2)) == 0 &&
                (s->B1 & s->B2) == 0,
            Errc::SetsNotDisjoint, "phi insertion sets must be pairwise disjoint");
  } else if (const auto* s = std::get_if<DisorderSpec>(&spec)) {
    in_range(s->A);
    in_range(s->B);
    g.require_embedding();
    for (const auto* fs : {&s->C, &s->D})
      for (int f : *fs)
        require(f >= 0 && f < g.face_count(), Errc::SpecInvalid, "face id out of range");
  } else if (const auto* s = std::get_if<ChiSpec>(&spec)) {
    g.require_embedding();
    auto corners = s->all();
    std::set<int> vs, fs;
    for (const Corner& c : corners) {
      require(c.vertex >= 0 && c.vertex < g.vertex_count() && c.face >= 0 &&
                  c.face < g.face_count(),
              Errc::SpecInvalid, "corner out of range");
      require(vs.insert(c.vertex).second, Errc::SetsNotDisjoint,
              "chi corners must have distinct vertices");
      if (c.face != g.outer_face())
        require(fs.insert(c.face).second, Errc::SetsNotDisjoint,
                "chi corners must have distinct inner faces");
    }
  }
}

VertexMask mask_of_labels(const Graph& g, const std::vector<int>& labels) {
  VertexMask m = 0;
  for (int lab : labels) {
    VertexMask bit = VertexMask{1} << g.vertex_index(lab);
    require(!(m & bit), Errc::SpecInvalid, "repeated vertex " + std::to_string(lab));
    m |= bit;
  }
  return m;
}

std::vector<int> labels_of_mask(const Graph& g, VertexMask m) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (m >> v & 1u) out.push_back(g.vertex_label(v));
  return out;
}

namespace {

std::vector<Corner> corners_from_json(const Graph& g, const nlohmann::json& arr) {
  std::vector<Corner> out;
  for (const auto& c : arr) {
    require(c.is_array() && c.size() == 2, Errc::BadInput, "corner must be [vertex, face]");
    out.push_back(Corner{g.vertex_index(c.at(0).get<int>()), c.at(1).get<int>()});
  }
  return out;
}

nlohmann::json corners_to_json(const Graph& g, const std::vector<Corner>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Corner& c : cs) arr.push_back({g.vertex_label(c.vertex), c.face});
  return arr;
}

}  // namespace

CorrelatorSpec spec_from_json(const Graph& g, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("bad spec JSON: ") + e.what());
  }
  CorrelatorSpec out;
  try {
    std::string type = j.at("type").get<std::string>();
    auto mask = [&](const char* key) {
      return j.contains(key) ? mask_of_labels(g, j.at(key).get<std::vector<int>>())
                             : VertexMask{0};
    };
    if (type == "sigma_tilde") {
      out = SigmaTildeSpec{mask("A"), mask("B")};
    } else if (type == "phi") {
      out = PhiSpec{mask("A1"), mask("A2"), mask("B1"), mask("B2")};
    } else if (type == "disorder") {
      DisorderSpec s;
      s.A = mask("A");
      s.B = mask("B");
      if (j.contains("C")) s.C = j.at("C").get<std::vector<int>>();
      if (j.contains("D")) s.D = j.at("D").get<std::vector<int>>();
      out = std::move(s);
    } else if (type == "chi") {
      ChiSpec s;
      if (j.contains("A1")) s.A1 = corners_from_json(g, j.at("A1"));
      if (j.contains("A2")) s.A2 = corners_from_json(g, j.at("A2"));
      if (j.contains("B1")) s.B1 = corners_from_json(g, j.at("B1"));
      if (j.contains("B2")) s.B2 = corners_from_json(g, j.at("B2"));
      out = std::move(s);
    } else {
      fail(Errc::BadInput, "unknown correlator type '" + type + "'");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("bad spec JSON: ") + e.what());
  }
  validate_spec(g, out);
  return out;
}

std::string spec_to_json(const Graph& g, const CorrelatorSpec& spec) {
  nlohmann::json j;
  if (const auto* s = std::get_if<SigmaTildeSpec>(&spec)) {
    j["type"] = "sigma_tilde";
    j["A"] = labels_of_mask(g, s->A);
    j["B"] = labels_of_mask(g, s->B);
  } else if (const auto* s = std::get_if<PhiSpec>(&spec)) {
    j["type"] = "phi";
    j["A1"] = labels_of_mask(g, s->A1);
    j["A2"] = labels_of_mask(g, s->A2);
    j["B1"] = labels_of_mask(g, s->B1);
    j["B2"] = labels_of_mask(g, s->B2);
  } else if (const auto* s = std::get_if<DisorderSpec>(&spec)) {
    j["type"] = "disorder";
    j["A"] = labels_of_mask(g, s->A);
    j["B"] = labels_of_mask(g, s->B);
    j["C"] = s->C;
    j["D"] = s->D;
  } else if (const auto* s = std::get_if<ChiSpec>(&spec)) {
    j["type"] = "chi";
    j["A1"] = corners_to_json(g, s->A1);
    j["A2"] = corners_to_json(g, s->A2);
    j["B1"] = corners_to_json(g, s->B1);
    j["B2"] = corners_to_json(g, s->B2);
  }
  return j.dump(2);
}

}  // namespace atlab
