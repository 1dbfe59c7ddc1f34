#pragma once

#include <string>
#include <string_view>

namespace arabidx::utf8 {

// Strict decoder: rejects overlongs, surrogates and values past U+10FFFF.
// Throws DecodeError carrying the byte offset of the first bad sequence.
std::u32string decode(std::string_view bytes);

// Throws DecodeError when invalid.
void validate(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

std::size_t length(std::string_view bytes);

}  // namespace arabidx::utf8

namespace arabidx {

// Basic Arabic letters: hamza through ghain, feh through yeh.
// Tatweel, marks, digits and extended (Persian/Urdu) letters are excluded.
constexpr bool is_arabic_letter(char32_t cp) noexcept {
  return (cp >= 0x0621 && cp <= 0x063A) || (cp >= 0x0641 && cp <= 0x064A);
}

constexpr bool is_space(char32_t cp) noexcept {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v' ||
         cp == 0x00A0 || cp == 0x2028 || cp == 0x2029 || (cp >= 0x2000 && cp <= 0x200A);
}

// True when every codepoint of a valid UTF-8 string is an Arabic letter.
bool is_arabic_word(std::string_view bytes);

}  // namespace arabidx
