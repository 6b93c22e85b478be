#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rlie::cli {

struct CheckResult {
  std::string check;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

/// hochschild, charpoly, wn-invariants, index, torus, counterexample, premet.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

/// TSV with header "check\tanchor\tstatus\tdetail".
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace rlie::cli
