#pragma once

#include <iosfwd>

namespace rpmsim {

// Full command-line entry point, callable in-process for testing.  Writes
// primary output to out (or to --output when given), warnings and errors to
// err.  Returns the process exit code: 0 success, 2 configuration error,
// 3 numeric failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace rpmsim
