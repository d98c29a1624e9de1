#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linespace {

inline constexpr const char* kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int kCompleted = 0;
inline constexpr int kUsage = 1;
inline constexpr int kTruncated = 2;
inline constexpr int kFinding = 3;
}  // namespace exit_code

/// Entry point of the `linespace` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linespace
