#include "wmkit/io.hpp"

#include <vector>

#include "wmkit/errors.hpp"

namespace wmkit {

namespace {

int value_of_symbol(char c) {
  switch (c) {
    case '+': return 1;
    case '-': return -1;
    case '0': return 0;
    default: return 2;  // sentinel: not in the alphabet
  }
}

}  // namespace

char entry_symbol(std::int8_t value) {
  return value > 0 ? '+' : (value < 0 ? '-' : '0');
}

std::string to_matrix_text(const TernaryMatrix& a) {
  const int n = a.order();
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(entry_symbol(a.at(i, j)));
    out.push_back('\n');
  }
  return out;
}

TernaryMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::string_view> data_lines;
  std::size_t pos = 0;
  bool seen_data = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    const std::string_view line =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;

    if (!line.empty() && line.front() == '#') {
      if (seen_data) throw FormatError("matrix text: comment after matrix data");
      continue;
    }
    seen_data = true;
    data_lines.push_back(line);
  }

  if (data_lines.empty()) throw FormatError("matrix text: empty input");
  const std::size_t n = data_lines.front().size();
  if (n == 0) throw FormatError("matrix text: empty row");
  if (data_lines.size() != n) throw FormatError("matrix text: data is not square");

  std::vector<std::int8_t> entries;
  entries.reserve(n * n);
  for (const std::string_view line : data_lines) {
    if (line.size() != n) throw FormatError("matrix text: ragged row");
    for (char c : line) {
      const int v = value_of_symbol(c);
      if (v == 2) throw FormatError(std::string("matrix text: invalid character '") + c + "'");
      entries.push_back(static_cast<std::int8_t>(v));
    }
  }
  return {static_cast<int>(n), std::move(entries)};
}

std::string to_rowspec_string(const RowSpec& r) {
  std::string out;
  out.reserve(static_cast<std::size_t>(r.size()));
  for (std::int8_t e : r.entries()) out.push_back(entry_symbol(e));
  return out;
}

RowSpec parse_rowspec_string(std::string_view token) {
  if (token.empty()) throw FormatError("rowspec: empty token");
  std::vector<std::int8_t> entries;
  entries.reserve(token.size());
  for (char c : token) {
    const int v = value_of_symbol(c);
    if (v == 2) throw FormatError(std::string("rowspec: invalid character '") + c + "'");
    entries.push_back(static_cast<std::int8_t>(v));
  }
  return RowSpec(std::move(entries));
}

}  // namespace wmkit
