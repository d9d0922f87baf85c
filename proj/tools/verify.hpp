#pragma once

#include <string>

#include <json.hpp>

namespace vcell::cli {

struct VerifyParams {
  int order = 16;   // recursions: truncation order K
  int s_max = 17;   // recursions: label levels
  int r_order = 20; // closed-forms
  int x_order = 14;
  int s_range = 8;  // closed-forms: largest s compared
  int edges = 4;    // oracle, parity, bijections
  int degree = 24;  // parity: total degree of the sum check
  std::string grid = "default";
};

// Each returns a report with "pass", "checks" and, on failure, "counterexample".
nlohmann::ordered_json verify_recursions(const VerifyParams& p);
nlohmann::ordered_json verify_closed_forms(const VerifyParams& p);
nlohmann::ordered_json verify_oracle(const VerifyParams& p);
nlohmann::ordered_json verify_parity(const VerifyParams& p);
nlohmann::ordered_json verify_bijections(const VerifyParams& p);
nlohmann::ordered_json verify_scaling(const VerifyParams& p);

}  // namespace vcell::cli
