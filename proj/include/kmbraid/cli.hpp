#ifndef KMBRAID_CLI_HPP
#define KMBRAID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kmbraid {

/// Runs one CLI invocation. Exit codes: 0 pass, 1 verification failure or
/// golden mismatch (machine-readable report on err), 2 usage/parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kmbraid

#endif
