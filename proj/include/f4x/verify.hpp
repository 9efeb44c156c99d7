#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace f4x {

inline constexpr const char* kVersion = "1.0.0";

enum class CheckStatus { kPass, kFail, kSkippedBudget };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string section;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json numbers = nlohmann::json::object();
  std::string message;
  double seconds = 0;
};

struct VerifyOptions {
  std::vector<std::string> sections;  // empty: all, in pipeline order
  std::optional<int> rep;  // restricts the per-orbit checks
  std::uint64_t budget = std::uint64_t{1} << 28;
  int threads = 1;
  bool oracle = false;  // plain enumeration for the stabilizer counts
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  std::vector<int> field_degrees;

  bool any_fail() const;
  bool any_skipped() const;
  /// 0 pass, 1 fail, 2 pass with budget skips.
  int exit_code() const;
  std::optional<std::string> first_failure() const;
  nlohmann::json to_json() const;
};

/// Pipeline order of the sections.
const std::vector<std::string>& verify_sections();

/// Runs the selected sections.  Throws std::invalid_argument for an unknown
/// section name or a rep outside 1..24.
VerifyReport verify(const VerifyOptions& opt);

/// Decimal string for counts that may exceed 64 bits; JSON numbers otherwise.
nlohmann::json count_json(unsigned __int128 c);

/// "xi5", "5" -> 5.  Throws std::out_of_range.
int parse_rep(const std::string& text);

}  // namespace f4x
