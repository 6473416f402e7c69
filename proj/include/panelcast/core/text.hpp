#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace panelcast {

/// Shortest decimal form that parses back to the identical double.
/// Used everywhere a double is written to disk so that emitted files are
/// byte-stable and round-trip exactly.
std::string format_double(double v);

double parse_double(std::string_view s);
std::int64_t parse_int64(std::string_view s);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string to_lower(std::string_view s);

/// FNV-1a over a byte string; stable across runs and builds.
std::uint64_t fnv1a(std::string_view bytes);

} // namespace panelcast
