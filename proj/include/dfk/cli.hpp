#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dfk {

// Entry point behind the `dfk` binary.  Exit codes: 0 for yes / valid /
// success, 1 for no / invalid, 2 for usage and parse errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace dfk
