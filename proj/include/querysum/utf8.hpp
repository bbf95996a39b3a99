#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace querysum {
namespace utf8 {

// Decodes a UTF-8 string into code points. Malformed bytes decode to
// U+FFFD, one replacement per offending byte, so decoding never fails.
std::vector<char32_t> decode(std::string_view text);

// Encodes a single code point back to UTF-8.
std::string encode(char32_t cp);

// Encodes a span of code points.
std::string encode(const char32_t* cps, std::size_t n);
inline std::string encode(const std::vector<char32_t>& cps) {
    return encode(cps.data(), cps.size());
}

// Whitespace for all character-level operations: ASCII whitespace plus
// the ideographic space U+3000.
bool is_space(char32_t cp);

// Code points of `text` excluding whitespace, in order.
std::vector<char32_t> chars_no_space(std::string_view text);

// Number of non-whitespace code points.
std::size_t char_length(std::string_view text);

}  // namespace utf8
}  // namespace querysum
