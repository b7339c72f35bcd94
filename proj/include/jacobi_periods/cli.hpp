#pragma once

#include <ostream>

namespace jacobi::cli {

// Exit codes.
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
// Computation aborted: precision or resource limit.
constexpr int kAborted = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jacobi::cli
