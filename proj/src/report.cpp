#include "wildbraid/report.hpp"

#include <sstream>

namespace wildbraid::report {

nlohmann::json Report::to_json(bool include_timings) const {
  nlohmann::json checks_json = nlohmann::json::array();
  long passed = 0;
  for (const auto& c : checks) {
    checks_json.push_back(nlohmann::json{{"claim", c.claim},
                                         {"inputs", c.inputs},
                                         {"outputs", c.outputs},
                                         {"pass", c.pass}});
    if (c.pass) ++passed;
  }
  nlohmann::json out{
      {"config", config},
      {"checks", checks_json},
      {"summary",
       {{"total", checks.size()}, {"passed", passed},
        {"failed", static_cast<long>(checks.size()) - passed},
        {"all_pass", all_pass()}}}};
  if (include_timings) out["timings"] = timings;
  return out;
}

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "# verification report\n\n";
  out << "config: `" << config.dump() << "`\n\n";
  out << "| claim | pass | outputs |\n|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << c.claim << " | " << (c.pass ? "yes" : "NO") << " | `"
        << c.outputs.dump() << "` |\n";
  }
  out << "\n" << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace wildbraid::report
