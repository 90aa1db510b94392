#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gaq {

using Json = nlohmann::json;

// Sorted keys, two-space indent, doubles with 17 significant digits,
// non-finite numbers as null.
std::string format_json(const Json& j);

// Shortest round-trip representation.
std::string format_csv_number(double x);

std::string csv_text(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gaq
