#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace aol {

inline constexpr const char* kToolVersion = "0.1.0";

using CsvCell = std::variant<std::string, double, long long>;

/// RFC 4180 rows preceded by "# config_hash=<hash> tool_version=<v>" and a header.
/// Doubles are written with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::string& config_hash, std::vector<std::string> columns);

  void row(const std::vector<CsvCell>& cells);

  static std::string quote(const std::string& field);
  static std::string format(const CsvCell& cell);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace aol
