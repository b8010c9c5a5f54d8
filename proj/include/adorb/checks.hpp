#pragma once

#include <string>
#include <vector>

#include "adorb/lgfib.hpp"
#include "adorb/report.hpp"

namespace adorb {

// Common knobs for the verification battery. `h` empty means the default
// regular integer potential (n, n-2, ..., -n).
struct CheckOptions {
  int n = 1;
  std::vector<Rational> h;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string scale = "trace";  // "trace" or "killing"
  long cap = 1000000;
};

OrbitSpec spec_from_options(const CheckOptions& opts);
FormSpec form_from_options(const CheckOptions& opts);

VerificationReport check_adjugate(const CheckOptions& opts);
VerificationReport check_trace_one(const CheckOptions& opts);
VerificationReport check_ratmap(const CheckOptions& opts);
VerificationReport check_sl3_formula();
VerificationReport check_hessian(const CheckOptions& opts);
VerificationReport check_critical(const CheckOptions& opts);
VerificationReport check_symplectic(const CheckOptions& opts);
VerificationReport check_lagrangian(const CheckOptions& opts);
VerificationReport check_charts(const CheckOptions& opts);
VerificationReport check_incidence(const CheckOptions& opts);
VerificationReport check_fiber_sl2(const CheckOptions& opts);
VerificationReport check_segre(const CheckOptions& opts);

// The battery behind `verify all`.
std::vector<VerificationReport> check_all(const CheckOptions& opts);

// Data listing for the `critical` subcommand.
nlohmann::json critical_listing(const OrbitSpec& spec, const FormSpec& form);

// Data listings for `orbit info` / `orbit sample`.
nlohmann::json orbit_info_listing(const OrbitSpec& spec);
nlohmann::json orbit_sample_listing(const OrbitSpec& spec, std::uint64_t seed, int length);

}  // namespace adorb
