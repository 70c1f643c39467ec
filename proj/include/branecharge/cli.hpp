#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "branecharge/error.hpp"
#include "branecharge/fan.hpp"
#include "branecharge/intersection.hpp"

namespace branecharge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kUnsupportedVariety = 2,
  kInvariantViolation = 3,
};

int exit_code_for(Errc code);

/// Reproducible divisor sweep: x <- x * 6364136223846793005 + 1442695040888963407
/// (mod 2^64); each coefficient is ((x >> 33) mod (2c + 1)) - c.
class SweepGenerator {
 public:
  explicit SweepGenerator(std::uint64_t seed) : state_(seed) {}
  std::int64_t next(std::int64_t max_coeff);
  std::vector<std::int64_t> divisor(int num_rays, std::int64_t max_coeff);

 private:
  std::uint64_t state_;
};

/// "1,0,-2" -> {1, 0, -2}. Throws ParseError.
std::vector<std::int64_t> parse_divisor_list(std::string_view text);

/// Graded class as {"codim": [{"codim": k, "terms": [{"cone": [...], "coeff": "p/q"}]}]}.
nlohmann::json class_to_json(const Fan& fan, const GradedClass& c);

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branecharge::cli
