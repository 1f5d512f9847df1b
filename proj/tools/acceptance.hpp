#pragma once

// The acceptance table: ten end-to-end checks over the desk-scale examples.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistcross/report.hpp"

namespace twistcross::acceptance {

struct CriterionResult {
  int         id = 0;
  std::string name;
  std::string tolerance;  // "exact" or the float tolerance used
  Report      report;

  bool        passed() const { return report.ok() && !report.clauses().empty(); }
  std::string line() const;
};

// Runs every criterion; exceptions become a failing "runs to completion"
// clause of the criterion that raised them.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

nlohmann::json to_json(std::vector<CriterionResult> const& results);

}  // namespace twistcross::acceptance
