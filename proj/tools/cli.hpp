#ifndef KAPPA_TOOLS_CLI_HPP
#define KAPPA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kappa::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
};

/// Runs one kappa-forge invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kappa::cli

#endif  // KAPPA_TOOLS_CLI_HPP
