#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fitkit/group.hpp"

namespace fitkit {

/// Group file:
///
///     # comment
///     degree 5
///     (1 2 3 4 5)
///     (1 2)
///
/// One generator per line in 1-based cycle notation, `()` for the
/// identity. Blank lines and `#` comments are skipped. Errors are
/// ParseError carrying the line number.
FiniteGroup parse_group(std::string_view text);
std::string format_group(const FiniteGroup& G);

FiniteGroup read_group_file(const std::filesystem::path& path);
void write_group_file(const std::filesystem::path& path, const FiniteGroup& G);

/// Whole file as a string; Error when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace fitkit
