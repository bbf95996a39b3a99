#include "querysum/utf8.hpp"

namespace querysum {
namespace utf8 {

static const char32_t kReplacement = 0xFFFD;

std::vector<char32_t> decode(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
        else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
        else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
        else { out.push_back(kReplacement); ++i; continue; }

        if (i + len > n) { out.push_back(kReplacement); ++i; continue; }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) { ok = false; break; }
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok) { out.push_back(kReplacement); ++i; continue; }
        // reject overlong forms and surrogates
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode(char32_t cp) {
    std::string s;
    if (cp < 0x80) {
        s += static_cast<char>(cp);
    } else if (cp < 0x800) {
        s += static_cast<char>(0xC0 | (cp >> 6));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        s += static_cast<char>(0xE0 | (cp >> 12));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        s += static_cast<char>(0xF0 | (cp >> 18));
        s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return s;
}

std::string encode(const char32_t* cps, std::size_t n) {
    std::string s;
    s.reserve(n * 3);
    for (std::size_t i = 0; i < n; ++i) s += encode(cps[i]);
    return s;
}

bool is_space(char32_t cp) {
    return cp == U' ' || (cp >= 0x09 && cp <= 0x0D) || cp == 0x3000;
}

std::vector<char32_t> chars_no_space(std::string_view text) {
    std::vector<char32_t> cps = decode(text);
    std::vector<char32_t> out;
    out.reserve(cps.size());
    for (char32_t c : cps)
        if (!is_space(c)) out.push_back(c);
    return out;
}

std::size_t char_length(std::string_view text) {
    std::size_t n = 0;
    for (char32_t c : decode(text))
        if (!is_space(c)) ++n;
    return n;
}

}  // namespace utf8
}  // namespace querysum
