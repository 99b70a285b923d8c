#include "gis/report.hpp"

#include <algorithm>
#include <sstream>

namespace gis {

CheckResult& Report::check(std::string_view name) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](CheckResult const& c) { return c.name == name; });
  if (it != checks_.end()) return *it;
  auto& c = checks_.emplace_back();
  c.name = std::string(name);
  return c;
}

void Report::fail(std::string_view name, std::string counterexample) {
  auto& c = check(name);
  ++c.checked;
  ++c.failures;
  if (c.counterexamples.size() < max_counterexamples) c.counterexamples.push_back(std::move(counterexample));
}

void Report::merge(Report const& other) {
  for (auto const& o : other.checks_) {
    auto& c = check(o.name);
    c.checked += o.checked;
    c.failures += o.failures;
    for (auto const& ce : o.counterexamples)
      if (c.counterexamples.size() < max_counterexamples) c.counterexamples.push_back(ce);
  }
}

bool Report::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](CheckResult const& c) { return c.passed(); });
}

CheckResult const* Report::find(std::string_view name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](CheckResult const& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (auto const& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"checked", c.checked},
                      {"failures", c.failures},
                      {"counterexamples", c.counterexamples}});
  }
  return {{"passed", passed()}, {"checks", checks}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (auto const& c : checks_) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked";
    if (!c.passed()) out << ", " << c.failures << " failed";
    out << ")\n";
    for (auto const& ce : c.counterexamples) out << "    " << ce << '\n';
  }
  out << (passed() ? "all checks passed\n" : "verification failed\n");
  return out.str();
}

}  // namespace gis
