#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gla::cli {

// Exit codes
inline constexpr int ok = 0;
inline constexpr int negative = 1;   // check failed, NonTheorem, invalid model
inline constexpr int usage = 2;      // bad arguments, unreadable files, parse errors
inline constexpr int unknown = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gla::cli
