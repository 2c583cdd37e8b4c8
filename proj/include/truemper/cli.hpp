#pragma once

#include <iosfwd>

namespace truemper {

enum ExitCode { kOk = 0, kNonMember = 1, kInputError = 2, kUnsupported = 3, kVerificationFailure = 4 };

/// Entry point of the command-line tool. JSON goes to `out`, diagnostics to `err`;
/// a graph argument of "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace truemper
