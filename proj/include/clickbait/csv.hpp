#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// RFC 4180 reader/writer: quoted fields may contain separators, doubled
// quotes and line breaks; CRLF and LF line endings are both accepted.
namespace clickbait::csv {

struct Row {
  std::vector<std::string> fields;
  /// 1-based physical line on which the row starts.
  std::size_t line = 0;
};

/// Throws FormatError on an unterminated quote or stray characters after a
/// closing quote. Blank lines are skipped.
std::vector<Row> parse(std::string_view content, char separator = ',');

std::string escape(std::string_view field, char separator = ',');
std::string join(const std::vector<std::string>& fields, char separator = ',');

}  // namespace clickbait::csv
