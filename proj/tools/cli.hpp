#pragma once

#include <ostream>

namespace ksb::cli {

/// Runs the command line in-process. Exit codes: 0 success, 1 soundness
/// violation in compare, 2 bad input or domain error, 3 resource cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ksb::cli
