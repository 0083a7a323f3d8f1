#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. The artifact goes to
/// out, diagnostics to err. Returns 0, 1 (domain error) or 2 (usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combdyn::cli
