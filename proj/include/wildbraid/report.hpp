// Machine-readable verification reports: one record per checked claim,
// deterministic JSON body (timings live in a separate, excluded field).
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace wildbraid::report {

struct CheckRecord {
  std::string claim;
  nlohmann::json inputs;
  nlohmann::json outputs;
  bool pass = false;
};

struct Report {
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  nlohmann::json timings;  // excluded from determinism guarantees

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json(bool include_timings = true) const;
  std::string to_markdown() const;
};

}  // namespace wildbraid::report
