#ifndef WECC_CLI_HPP
#define WECC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wecc {

enum class ExitCode : int { kClean = 0, kViolation = 1, kUsage = 2 };

enum class OutputFormat { kRecords, kCsv };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input;  // "-" reads standard input
  std::size_t max_n = 0;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::kRecords;
  bool strict = false;
};

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns 0 when clean, 1 when any check found
/// a violation, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace wecc

#endif  // WECC_CLI_HPP
