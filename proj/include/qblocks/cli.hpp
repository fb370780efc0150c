#pragma once

// Subcommand front end. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "qblocks/dyck.hpp"

namespace qblocks::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. `eval` reads its JSON document from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Accepts "-" or "" for the empty path.
DyckPath parse_path(const std::string& s);

}  // namespace qblocks::cli
