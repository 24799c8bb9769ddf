#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Thin UTF-8 helpers over ICU. All text crossing module boundaries is UTF-8.
namespace clickbait::unicode {

/// Decodes UTF-8; ill-formed sequences become U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

std::size_t length(std::string_view utf8);

std::string to_lower(std::string_view utf8);
std::string to_nfc(std::string_view utf8);
std::string trim(std::string_view utf8);

/// Collapses every whitespace run to one ASCII space and trims the ends.
std::string collapse_whitespace(std::string_view utf8);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_space(char32_t cp);
bool is_mark(char32_t cp);
bool is_apostrophe(char32_t cp);

}  // namespace clickbait::unicode
