#ifndef PPOLY_CLI_HPP
#define PPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ppoly::cli {

/// Runs one CLI invocation (without the program name). Output is
/// deterministic for a given input. Returns 0 on success, 1 on a domain
/// error, 2 on a usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ppoly::cli

#endif
