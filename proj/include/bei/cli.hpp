#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bei {

// Exit codes: 0 success, 1 failed verification or internal error,
// 2 usage or validation error, 3 resource cap reached.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// args excludes the program name. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bei
