#pragma once
#include <iosfwd>

namespace chev {

// Dispatches one command-line invocation and writes its JSON report to out
// (or to --out when given). Returns 0 on success, 1 when a verification ran
// and failed, 2 on usage errors (bad flags, unsupported type, bad ring).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chev
