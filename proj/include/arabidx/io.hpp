#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace arabidx::io {

// Throws InputError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary then renames, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace arabidx::io
