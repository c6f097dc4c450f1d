#pragma once

#include <iosfwd>

namespace ktheta::cli {

// Runs the command-line frontend; returns the process exit code.
// Exit codes: 0 success, 1 verification failure, 2 precondition violation
// (splitting / alignment), 3 resource cap, 64 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ktheta::cli
