#include "gaelcheck/text.hpp"

#include "gaelcheck/errors.hpp"

namespace gaelcheck::text {

namespace {

bool decode_one(std::string_view s, std::size_t& i, char32_t& out) {
    auto b = static_cast<unsigned char>(s[i]);
    int extra;
    char32_t cp;
    if (b < 0x80) {
        out = b;
        ++i;
        return true;
    } else if ((b & 0xE0) == 0xC0) {
        extra = 1;
        cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
        extra = 2;
        cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
        extra = 3;
        cp = b & 0x07;
    } else {
        return false;
    }
    if (i + extra >= s.size()) return false;
    for (int k = 1; k <= extra; ++k) {
        auto c = static_cast<unsigned char>(s[i + k]);
        if ((c & 0xC0) != 0x80) return false;
        cp = (cp << 6) | (c & 0x3F);
    }
    static constexpr char32_t min_for[] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_for[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    out = cp;
    i += extra + 1;
    return true;
}

// base vowel -> precomposed with acute (U+0301) / grave (U+0300)
char32_t compose(char32_t base, char32_t mark) {
    static constexpr std::u32string_view bases = U"AEIOUaeiou";
    static constexpr std::u32string_view acute = U"ÁÉÍÓÚáéíóú";
    static constexpr std::u32string_view grave = U"ÀÈÌÒÙàèìòù";
    auto pos = bases.find(base);
    if (pos == std::u32string_view::npos) return 0;
    if (mark == 0x301) return acute[pos];
    if (mark == 0x300) return grave[pos];
    return 0;
}

}  // namespace

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    char32_t c;
    while (i < s.size())
        if (!decode_one(s, i, c)) return false;
    return true;
}

std::u32string decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    char32_t c;
    while (i < s.size()) {
        if (!decode_one(s, i, c))
            throw FormatError("invalid UTF-8 at byte " + std::to_string(i));
        out.push_back(c);
    }
    return out;
}

std::string encode(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string encode(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t c : s) out += encode(c);
    return out;
}

std::u32string nfc(std::u32string_view s) {
    std::u32string out;
    out.reserve(s.size());
    for (char32_t c : s) {
        if ((c == 0x301 || c == 0x300) && !out.empty()) {
            if (char32_t composed = compose(out.back(), c)) {
                out.back() = composed;
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

bool is_upper(char32_t c) {
    return (c >= U'A' && c <= U'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7);
}

char32_t fold(char32_t c) {
    if (is_upper(c)) return c + 0x20;
    if (c == 0x2019) return U'\'';
    return c;
}

std::u32string fold(std::u32string_view s) {
    std::u32string out(s);
    for (auto& c : out) c = fold(c);
    return out;
}

std::string normalize(std::string_view s) { return encode(fold(nfc(decode(s)))); }

std::string nfc_utf8(std::string_view s) { return encode(nfc(decode(s))); }

bool is_letter(char32_t c) {
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
    if (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7) return true;
    return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

std::size_t length(std::string_view s) { return decode(s).size(); }

}  // namespace gaelcheck::text
