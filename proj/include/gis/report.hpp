#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gis {

// Outcome of one named check. Only the first few counterexamples are kept;
// `failures` counts all of them.
struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return failures == 0; }
};

class Report {
 public:
  static constexpr std::size_t max_counterexamples = 5;

  // Returns the check with this name, creating it on first use.
  CheckResult& check(std::string_view name);

  void pass(std::string_view name) { ++check(name).checked; }
  void fail(std::string_view name, std::string counterexample);
  // describe() builds the counterexample text; it only runs on failure.
  template <std::invocable Describe>
  void record(std::string_view name, bool ok, Describe&& describe) {
    if (ok) {
      pass(name);
    } else {
      fail(name, std::string(describe()));
    }
  }

  void merge(Report const& other);

  bool passed() const noexcept;
  std::vector<CheckResult> const& checks() const noexcept { return checks_; }
  CheckResult const* find(std::string_view name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace gis
