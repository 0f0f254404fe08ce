#pragma once

// The `goldman` command line, callable in-process. Exit codes: 0 success,
// 1 a check ran and came out false, 2 usage or input errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace goldman {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldman
