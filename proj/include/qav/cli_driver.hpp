#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qav {

// Runs one CLI invocation (args exclude the program name) and returns the
// exit code: 0 pass/holds, 1 fail with witness, 2 input error, 3
// inconclusive or grid-relative verdict.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qav
