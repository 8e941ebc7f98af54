#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace medq::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  // Summary on success, first failures otherwise.
  std::string detail;
};

std::vector<CriterionResult> run_all(std::uint64_t seed = 20261016);

// Calls report after each criterion so slow runs show progress.
std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& report);

std::string format_line(const CriterionResult& r);

}  // namespace medq::acceptance
