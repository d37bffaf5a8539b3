#include "aol/csv.hpp"

#include <cmath>
#include <cstdio>

#include "aol/errors.hpp"

namespace aol {

CsvWriter::CsvWriter(std::ostream& out, const std::string& config_hash,
                     std::vector<std::string> columns)
    : out_(out), width_(columns.size()) {
  out_ << "# config_hash=" << config_hash << " tool_version=" << kToolVersion << "\r\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << quote(columns[i]);
  out_ << "\r\n";
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  if (cells.size() != width_) throw StateError("CSV row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << format(cells[i]);
  out_ << "\r\n";
}

std::string CsvWriter::quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string CsvWriter::format(const CsvCell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return quote(*s);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  const double d = std::get<double>(cell);
  if (std::isnan(d)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace aol
