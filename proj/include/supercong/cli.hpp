#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supercong {

/// Parses "lo..hi" (or a single integer); std::invalid_argument when
/// malformed, negative or empty.
std::pair<long, long> parse_range(std::string_view text);

/// Comma-separated shell globs; true when any of them matches id.
bool matches_any(const std::vector<std::string>& globs, const std::string& id);

/// Whole command line, e.g. {"supercong", "verify", "--cases", "C321"}.
/// Returns 0 when every report passes, 1 on any failure, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace supercong
