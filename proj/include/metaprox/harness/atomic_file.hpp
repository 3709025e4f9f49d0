#pragma once

#include <filesystem>
#include <string_view>

namespace metaprox::harness {

/// Writes contents to a temporary file next to path, then renames it over
/// path, so readers never observe a partial file. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace metaprox::harness
