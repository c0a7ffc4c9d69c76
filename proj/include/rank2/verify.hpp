#ifndef RANK2_VERIFY_HPP
#define RANK2_VERIFY_HPP

#include <optional>

#include "rank2/json_io.hpp"

namespace rank2 {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 32;
  std::optional<Preset> onlyPreset;  // restrict the suite to one preset
  int onlyN = 0;                     // together with onlyPreset == SO_2_NP2
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

/// Criteria 1-10 of the verification suite.
std::vector<CriterionResult> run_criteria(const VerifyOptions& opts);

/// Criterion 11: serializing the suite twice yields identical bytes.
CriterionResult determinism_criterion(const VerifyOptions& opts,
                                      const std::vector<CriterionResult>& firstRun);

nlohmann::json suite_to_json(const std::vector<CriterionResult>& results,
                             const VerifyOptions& opts);
std::string suite_to_text(const std::vector<CriterionResult>& results);
bool suite_passes(const std::vector<CriterionResult>& results);

}  // namespace rank2

#endif
