#pragma once

#include <string>
#include <string_view>

namespace gaelcheck::text {

bool valid_utf8(std::string_view s);

// Throws FormatError on malformed input.
std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);
std::string encode(char32_t c);

// Composes base letter + combining acute/grave into precomposed Latin-1 forms.
std::u32string nfc(std::u32string_view s);

char32_t fold(char32_t c);
std::u32string fold(std::u32string_view s);
bool is_upper(char32_t c);

// decode + nfc + fold + encode
std::string normalize(std::string_view s);
// decode + nfc, case kept
std::string nfc_utf8(std::string_view s);

bool is_letter(char32_t c);
bool is_digit(char32_t c);

std::size_t length(std::string_view s);

}  // namespace gaelcheck::text
