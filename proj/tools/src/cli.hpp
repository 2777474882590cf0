#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgossip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

/// Entry point behind the `bgossip` executable. `args` excludes the program
/// name. Returns 0 on success, 2 on invalid input, 1 on internal errors or
/// failed verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgossip::cli
