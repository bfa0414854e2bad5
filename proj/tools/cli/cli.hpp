#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace conesing::cli {

enum class Format { Text, Json, Dot };

/// Parsed command line: one subcommand, its flag values as given, and the output sink.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> options;  ///< flag name without dashes -> raw value
  std::optional<std::string> output;           ///< --out path; stdout when empty
  Format format = Format::Text;
};

/// Bad flags, bad flag values, or a format the subcommand cannot emit. Exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns nullopt when help was requested (already printed to `out`).
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Runs one subcommand. 0 on success, 1 on library errors (structured JSON on `err`),
/// 2 on usage errors; paper-check exits 1 when any assertion fails.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + dispatch. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conesing::cli
