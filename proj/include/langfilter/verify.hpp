#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace langfilter {

enum class Outcome { pass, fail, skipped };

std::string_view to_string(Outcome outcome);

struct ClaimRecord {
  std::string claim;
  std::string parameters;
  Outcome outcome = Outcome::pass;
  // Concrete counterexample when outcome is fail; attempted bound when skipped.
  std::string witness;
  std::vector<std::string> details;
  double elapsed_seconds = 0.0;
};

struct VerificationReport {
  std::vector<ClaimRecord> records;

  bool all_passed() const;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
  bool deep = false;
  // Filtered-word length bound for the construction/oracle comparison.
  std::size_t max_len = 7;
  std::size_t construction_pool = 50;
  std::size_t atlas_pool = 20;
  std::size_t diag_pool = 30;
  // Node budget for each pruned search in the thm5 claim.
  std::uint64_t thm5_node_budget = 200'000'000;
};

inline constexpr std::string_view kClaimIds[] = {"thm1", "thm2", "thm3",
                                                 "thm4", "thm5"};

ClaimRecord verify_thm1(const VerifyConfig& config);
ClaimRecord verify_thm2(const VerifyConfig& config);
ClaimRecord verify_thm3(const VerifyConfig& config);
ClaimRecord verify_thm4(const VerifyConfig& config);
ClaimRecord verify_thm5(const VerifyConfig& config);

// Runs the requested claims ("all" expands to every id). Records are ordered
// by claim id. Throws InputError for unknown ids.
VerificationReport verify(std::span<const std::string> claims,
                          const VerifyConfig& config, bool parallel = false);

std::string render_table(const VerificationReport& report, bool with_timing);
nlohmann::json report_to_json(const VerificationReport& report, bool with_timing);

}  // namespace langfilter
