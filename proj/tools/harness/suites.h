#ifndef LOGICWB_TOOLS_SUITES_H_
#define LOGICWB_TOOLS_SUITES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logicwb/structure.h"

namespace logicwb::harness {

struct CaseFailure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  nlohmann::json input;
  nlohmann::json expected;
  nlohmann::json got;
};

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Overrides the suite's default case count where the suite is sampled.
  std::optional<std::size_t> cases;
  // When non-empty, sampled suites draw their structures from here instead
  // of generating them.
  std::vector<PointedStructure> corpus;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for unknown suite names.
CheckReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace logicwb::harness

#endif  // LOGICWB_TOOLS_SUITES_H_
