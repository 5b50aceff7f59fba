#pragma once

#include <ostream>

namespace tdcode::cli {

// Entry point shared by the binary and the tests. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdcode::cli
