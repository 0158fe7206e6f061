#ifndef CORRCHAN_CSV_HPP
#define CORRCHAN_CSV_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace corrchan {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numeric table with '#' metadata comment lines and a header row. Values
/// are written with 17 significant digits so readers compare numerically,
/// not textually.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Writes via a temporary file in the same directory plus rename, so readers
/// never observe a partial file.
void write_csv_atomic(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

/// 17-significant-digit rendering used for all numeric output.
std::string format_double(double v);

}  // namespace corrchan

#endif
