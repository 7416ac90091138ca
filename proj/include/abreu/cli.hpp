#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abreu {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitVerification = 4;

inline constexpr const char* kToolVersion = "1.0.0";

// Entry point of the command line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abreu
