#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace nihdl {

std::optional<std::string> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`. Returns
/// false if any step fails; the temporary is removed in that case.
bool write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace nihdl
