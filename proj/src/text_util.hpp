#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cprex::text {

// All character offsets in this toolkit are Unicode code points over UTF-8
// bytes, never byte offsets.

std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view cps);

std::size_t codepoint_count(std::string_view bytes);

// Slice [cp_start, cp_end) out of UTF-8 text by code point offsets.
std::string codepoint_slice(std::string_view bytes, std::size_t cp_start,
                            std::size_t cp_end);

std::vector<std::string> split(std::string_view line, char delim);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);

inline bool is_ws(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}
inline bool is_ascii_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }
inline bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
inline bool is_ascii_alnum(char32_t c) {
  return is_ascii_digit(c) || is_ascii_upper(c) || (c >= U'a' && c <= U'z');
}

// Reads a whole file; throws UsageError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

// Splits file content into lines on '\n', dropping a trailing '\r' per line
// and a final empty line.
std::vector<std::string> read_lines(const std::string& path);

}  // namespace cprex::text
