#pragma once

#include <string>
#include <vector>

#include "atlab/rational.hpp"

namespace atlab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// One verified identity/inequality instance. Both exact sides are always
/// recorded as strings so failures are diagnosable from the report alone.
struct CheckRecord {
  std::string check_id;
  std::string graph_id;
  int sample = -1;
  std::string lhs, rhs;
  bool pass = false;
  double runtime_ms = 0;  // emitted only when timings are requested
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  /// Deterministic JSON: sorted keys, exact strings, no floats unless
  /// with_timings (timings vary run to run and are off by default so equal
  /// seeds give byte-identical reports).
  std::string to_json(bool with_timings = false) const;
};

}  // namespace atlab
