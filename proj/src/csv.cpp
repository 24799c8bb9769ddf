#include "clickbait/csv.hpp"

#include "clickbait/error.hpp"

namespace clickbait::csv {

std::vector<Row> parse(std::string_view content, char separator) {
  std::vector<Row> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = content.size();
  if (n >= 3 && content.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  while (i < n) {
    Row row;
    row.line = line;
    std::string field;
    bool row_done = false;
    bool any_char = false;
    while (!row_done) {
      if (i < n && content[i] == '"') {
        const std::size_t quote_line = line;
        ++i;
        while (true) {
          if (i >= n) throw FormatError("unterminated quoted field", quote_line);
          const char c = content[i];
          if (c == '"') {
            if (i + 1 < n && content[i + 1] == '"') {
              field.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        any_char = true;
        if (i < n && content[i] != separator && content[i] != '\n' && content[i] != '\r') {
          throw FormatError("unexpected character after closing quote", line);
        }
      } else {
        while (i < n && content[i] != separator && content[i] != '\n' && content[i] != '\r') {
          if (content[i] == '"') throw FormatError("bare quote inside unquoted field", line);
          field.push_back(content[i++]);
          any_char = true;
        }
      }
      row.fields.push_back(std::move(field));
      field.clear();
      if (i < n && content[i] == separator) {
        ++i;
        any_char = true;
        continue;
      }
      if (i < n && content[i] == '\r') ++i;
      if (i < n && content[i] == '\n') {
        ++i;
        ++line;
      }
      row_done = true;
    }
    if (any_char) rows.push_back(std::move(row));
  }
  return rows;
}

std::string escape(std::string_view field, char separator) {
  const bool needs_quotes = field.find_first_of(std::string{'"', '\n', '\r', separator}) != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& fields, char separator) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(separator);
    out += escape(fields[i], separator);
  }
  return out;
}

}  // namespace clickbait::csv
