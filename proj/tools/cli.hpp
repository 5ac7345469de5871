#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddinv::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInvalidMatrix = 2;
inline constexpr int kBoundViolated = 3;

/// Relative slack allowed before a measured error counts as exceeding the
/// bound.
inline constexpr double kBoundSlack = 1e-9;

/// Entry point behind the ddinv binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddinv::cli
