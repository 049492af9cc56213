// colmon - collision-table monoids and their subshifts
//
// Command-line driver. Exit codes: 0 success, 1 negative analysis result,
// 2 invalid invocation or presentation, 3 internal error.

#ifndef COLMON_CLI_HPP_
#define COLMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace colmon::cli {

  enum ExitCode : int {
    ok       = 0,
    negative = 1,
    invalid  = 2,
    internal = 3
  };

  // args excludes the program name. A presentation argument of the form
  // @name loads the built-in catalog entry instead of a file.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace colmon::cli

#endif  // COLMON_CLI_HPP_
