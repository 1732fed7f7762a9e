#pragma once

#include <filesystem>
#include <string>

namespace germlab {

// Shortest round-trip decimal form of v; deterministic across runs.
std::string fmt_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace germlab
