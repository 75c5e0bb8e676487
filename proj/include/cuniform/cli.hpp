#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuniform {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerifyFailed = 3;

// Largest n for which full tables are materialised (2^n x 2^n counts per c).
inline constexpr unsigned kMaxTableDegree = 12;

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cuniform
