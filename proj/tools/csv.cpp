#include "csv.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nanores::cli {

std::string format_g(double value, int digits) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

std::string format_g17(double value) { return format_g(value, 17); }

void write_figure_csv(std::ostream& os, std::span<const FigureRow> rows) {
  os << kFigureHeader << '\n';
  for (const auto& row : rows) {
    os << format_g17(row.h);
    for (const Complex v : {row.exact, row.r0, row.r0r1, row.r0r1r2})
      os << ',' << format_g17(v.real()) << ',' << format_g17(v.imag());
    os << '\n';
  }
}

std::vector<std::vector<double>> parse_figure_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    if (header) {
      if (line != kFigureHeader) throw std::invalid_argument("unexpected CSV header");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto comma = line.find(',', pos);
      const std::string_view field = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
      double v = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw std::invalid_argument("malformed CSV field '" + std::string(field) + "'");
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_numeric_csv(const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  os << kFigureHeader << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_g17(row[i]);
    os << '\n';
  }
  return os.str();
}

} // namespace nanores::cli
