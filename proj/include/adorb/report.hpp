#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace adorb {

// Structured pass/fail record of one theorem check. Re-running with the
// same (check_name, n, seed, sample_count) reproduces the report except
// for timing_ms.
struct VerificationReport {
  std::string check_name;
  std::string paper_anchor;
  int n = 0;
  std::uint64_t seed = 0;
  int sample_count = 0;
  bool passed = false;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json params = nlohmann::json::object();
  long timing_ms = 0;
};

nlohmann::json report_to_json(const VerificationReport& r);

// Canonical serialization: keys sorted, exact rationals as strings,
// stable across runs.
std::string emit_report(const VerificationReport& r);

}  // namespace adorb
