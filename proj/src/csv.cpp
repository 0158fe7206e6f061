#include "corrchan/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace corrchan {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_csv(const CsvTable& table) {
  std::ostringstream out;
  for (const std::string& c : table.comments) out << "# " << c << "\n";
  for (size_t i = 0; i < table.header.size(); ++i)
    out << table.header[i] << (i + 1 < table.header.size() ? "," : "");
  if (!table.header.empty()) out << "\n";
  for (const auto& row : table.rows) {
    if (!table.header.empty() && row.size() != table.header.size())
      throw IoError("csv row width does not match the header");
    for (size_t i = 0; i < row.size(); ++i)
      out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      size_t start = line.find_first_not_of(" \t", 1);
      table.comments.push_back(start == std::string::npos ? ""
                                                          : line.substr(start));
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      table.header = cells;
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& c : cells) {
      size_t used = 0;
      double v;
      try {
        v = std::stod(c, &used);
      } catch (const std::exception&) {
        throw IoError("csv cell is not numeric: " + c);
      }
      if (used != c.size()) throw IoError("csv cell is not numeric: " + c);
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv_atomic(const std::string& path, const CsvTable& table) {
  const std::string text = format_csv(table);
  const std::filesystem::path target(path);
  const std::filesystem::path tmp =
      target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path);
  }
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace corrchan
