#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <majorana/types.hpp>

namespace majorana::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line (without the program name) against the given streams
/// and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "1.5", "-2i", "0.3-0.4i" and similar complex literals.
Complex parse_complex(const std::string& text);

/// Parses a comma separated list of integers such as "1,2,3".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace majorana::cli
