#include "atlab/report.hpp"

#include <json.hpp>

namespace atlab {

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string VerificationReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "atlab";
  j["version"] = kToolVersion;
  j["suite"] = suite;
  j["seed"] = seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["check"] = c.check_id;
    jc["graph"] = c.graph_id;
    jc["sample"] = c.sample;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    jc["pass"] = c.pass;
    if (with_timings) jc["runtime_ms"] = c.runtime_ms;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2);
}

}  // namespace atlab
