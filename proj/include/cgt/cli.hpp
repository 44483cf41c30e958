#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt::cli {

/// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command. `args` excludes the program name; `-` as an input
/// argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cgt::cli
