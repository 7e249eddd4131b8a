#pragma once

#include <iosfwd>

namespace motiondual::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failed = 2;

/// Entry point of the motiondual tool. Returns 0 on success, 1 for usage or
/// input errors and 2 when a verification fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motiondual::cli
