#include "adorb/report.hpp"

namespace adorb {

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check_name"] = r.check_name;
  j["paper_anchor"] = r.paper_anchor;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["sample_count"] = r.sample_count;
  j["passed"] = r.passed;
  j["witnesses"] = r.witnesses;
  j["params"] = r.params;
  j["timing_ms"] = r.timing_ms;
  return j;
}

std::string emit_report(const VerificationReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

}  // namespace adorb
