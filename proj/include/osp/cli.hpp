#ifndef OSP_CLI_HPP
#define OSP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace osp::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  // a verification found a counterexample
  kUsage = 2,     // bad arguments, malformed input, or a bound exceeded
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and progress to `err`. Nothing is written to `out` when the
// exit code is kUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osp::cli

#endif  // OSP_CLI_HPP
