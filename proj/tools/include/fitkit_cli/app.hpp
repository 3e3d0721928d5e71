#pragma once

#include <iosfwd>

namespace fitkit::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Whole command line, writing to the given streams. Caps set by flags
/// are restored on return.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fitkit::cli
