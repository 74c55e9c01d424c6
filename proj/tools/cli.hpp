#pragma once

#include <ostream>

namespace qprm::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Runs one command line; everything is written to out/err after the computation finishes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qprm::cli
