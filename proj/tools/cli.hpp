#ifndef DGCLIQUE_TOOLS_CLI_HPP
#define DGCLIQUE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dgclique/verify.hpp"

namespace dgclique::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrInputError = 1,
  kGuardTripped = 2,
  kVerifyMismatch = 3,
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  // Replaces the enumerator that `verify` checks; used for mutation testing.
  oracle::Enumerator verify_enumerator;
};

// args[0] is the program name.
int run(const std::vector<std::string>& args, const Context& ctx);

}  // namespace dgclique::cli

#endif  // DGCLIQUE_TOOLS_CLI_HPP
