#ifndef IE_CLI_HPP
#define IE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ie {

/// Exit codes of the command-line surface.
enum ExitCode {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsageError = 2,
  kExitResourceLimit = 3,
};

/// Runs one command-line invocation; args excludes the program name.
/// Identical inputs produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ie

#endif
