#ifndef LOGICWB_TOOLS_CLI_H_
#define LOGICWB_TOOLS_CLI_H_

#include <iosfwd>

namespace logicwb::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // sat: unsat
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kPrecondition = 70,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logicwb::cli

#endif  // LOGICWB_TOOLS_CLI_H_
