#ifndef PHRASEKIT_IO_UTIL_HPP
#define PHRASEKIT_IO_UTIL_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace phrasekit {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Non-empty lines of a text file (trailing '\r' stripped).
std::vector<std::string> read_lines(const std::string& path);

nlohmann::json load_json(const std::string& path);
std::vector<nlohmann::json> load_jsonl(const std::string& path);

// Shortest round-trip decimal form of a double ("0.43", not "0.43000...").
std::string format_double(double v);

// RFC-4180 style quoting; only applied when the field needs it.
std::string csv_quote(const std::string& field);
std::vector<std::string> csv_split(const std::string& line);

std::string to_lower(std::string s);
std::vector<std::string> split_whitespace(const std::string& s);

}  // namespace phrasekit

#endif
