#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hess::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kCapExceeded = 3;
inline constexpr int kIdentityFailure = 4;

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hess::cli
