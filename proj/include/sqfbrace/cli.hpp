#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqfbrace/groups.hpp"

namespace sqfb {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBound = 3 };

/// Resolves a group selector against enumerate_groups(n): a 0-based index,
/// "d:e:k" or "G(d,e,k)". Throws Error on anything else.
GroupDescriptor resolve_selector(Int n, const std::string& selector);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfb
