#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pangular::cli {

/// Runs the pangular command line. args excludes the program name.
/// Exit codes: 0 success / property held, 1 violation found (verify, probe,
/// chain), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pangular::cli
