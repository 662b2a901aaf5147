#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwass::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsageError = 2,
  kInputParseError = 3,
  kInputValidationError = 4,
  kVerificationFailed = 5,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A penalty choice from the command line: a number, "auto"/"Bstar+eps"
/// (B* (1 + margin)), or "Bstar" (exactly B*).
struct PenaltySpec {
  enum class Kind { Value, BStar, BStarPlusMargin };
  Kind kind = Kind::BStarPlusMargin;
  double value = 0.0;
  std::string label;

  double resolve(double b_star, double margin) const;
};

/// Throws UsageError for unrecognised tokens or negative values.
PenaltySpec parse_penalty_spec(std::string_view token);
/// Comma-separated list; "presets" expands to 1,Bstar,Bstar+eps. Throws
/// UsageError when empty.
std::vector<PenaltySpec> parse_penalty_list(std::string_view text);

/// Entry point: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwass::cli
