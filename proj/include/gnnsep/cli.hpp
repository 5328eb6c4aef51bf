#ifndef GNNSEP_CLI_HPP
#define GNNSEP_CLI_HPP

#include <string>
#include <vector>

namespace gnnsep {

// Dispatches one CLI invocation; args excludes the program name.
// Exit codes: 0 success, 2 NotFound/Undecided/not-verified, 1 error.
int run_cli(std::vector<std::string> args);

}  // namespace gnnsep

#endif
