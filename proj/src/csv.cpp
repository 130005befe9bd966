#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "mstdep/dataset.hpp"

namespace mstdep {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

bool parse_number(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end;
}

struct Line {
  std::size_t row;
  std::string_view text;
};

std::vector<Line> non_empty_lines(const std::string& text) {
  std::vector<Line> lines;
  std::string_view rest(text);
  std::size_t row = 0;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    auto line = rest.substr(0, nl);
    if (!trim(line).empty()) lines.push_back({row, line});
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
    ++row;
  }
  return lines;
}

std::string cell_name(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

}  // namespace

bool csv_looks_like_header(const std::string& text, char delimiter) {
  const auto lines = non_empty_lines(text);
  if (lines.empty()) return false;
  double v = 0.0;
  for (auto field : split(lines.front().text, delimiter))
    if (!parse_number(field, v)) return true;
  return false;
}

Dataset parse_csv(const std::string& text, const CsvOptions& options) {
  const auto lines = non_empty_lines(text);
  if (lines.empty()) throw ParseError("CSV input is empty", 0, 0);

  std::vector<Column> columns;
  std::size_t first_data = 0;
  const auto head = split(lines.front().text, options.delimiter);
  columns.resize(head.size());
  if (options.has_header) {
    for (std::size_t c = 0; c < head.size(); ++c) columns[c].name = std::string(unquote(head[c]));
    first_data = 1;
  } else {
    for (std::size_t c = 0; c < head.size(); ++c) columns[c].name = "c" + std::to_string(c);
  }

  for (std::size_t li = first_data; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto fields = split(line.text, options.delimiter);
    if (fields.size() != columns.size()) {
      throw ParseError("ragged row at row " + std::to_string(line.row) + ": expected " +
                           std::to_string(columns.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line.row, std::min(fields.size(), columns.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v = 0.0;
      if (!parse_number(fields[c], v))
        throw ParseError("cannot parse '" + std::string(fields[c]) + "' as a number at " +
                             cell_name(line.row, c),
                         line.row, c);
      if (!std::isfinite(v))
        throw ParseError("non-finite value '" + std::string(fields[c]) + "' at " +
                             cell_name(line.row, c),
                         line.row, c);
      columns[c].values.push_back(v);
    }
  }
  const std::size_t rows = columns.front().values.size();
  if (rows < 2) throw ParseError("CSV input needs at least two data rows", 0, 0);
  return Dataset(std::move(columns));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), options);
}

std::string to_csv(const Dataset& data, char delimiter) {
  std::ostringstream out;
  out << std::setprecision(17);
  const auto& cols = data.columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? std::string(1, delimiter) : "") << cols[c].name;
  out << '\n';
  for (std::size_t i = 0; i < data.n_points(); ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out << delimiter;
      out << cols[c].values[i];
    }
    out << '\n';
  }
  return out.str();
}

void write_csv(const Dataset& data, const std::filesystem::path& path, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_csv(data, delimiter);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mstdep
