#include "dtls/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dtls {

namespace {

std::vector<std::string> column_keys(const std::vector<ReportRow>& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows)
    for (const auto& cell : row.cells)
      if (std::find(keys.begin(), keys.end(), cell.key) == keys.end()) keys.push_back(cell.key);
  return keys;
}

std::optional<int> cell_value(const ReportRow& row, const std::string& key) {
  for (const auto& cell : row.cells)
    if (cell.key == key) return cell.errors;
  return std::nullopt;
}

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s;
  return out.str();
}

}  // namespace

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  std::vector<std::string> keys = column_keys(rows);
  out << "name,initial";
  for (const auto& k : keys) out << "," << k;
  out << ",seconds,timeout,note\n";
  for (const auto& row : rows) {
    out << row.name << ",";
    if (row.initial) out << *row.initial;
    for (const auto& k : keys) {
      out << ",";
      auto v = cell_value(row, k);
      if (v) out << *v;
    }
    out << "," << seconds_text(row.seconds) << "," << (row.timed_out ? 1 : 0) << ","
        << row.note << "\n";
  }
}

std::string format_report_table(const std::vector<ReportRow>& rows) {
  std::vector<std::string> keys = column_keys(rows);
  std::vector<std::string> header{"name", "initial"};
  header.insert(header.end(), keys.begin(), keys.end());
  header.push_back("seconds");

  std::vector<std::vector<std::string>> grid;
  grid.push_back(header);
  for (const auto& row : rows) {
    std::vector<std::string> line{row.name,
                                  row.initial ? std::to_string(*row.initial) : "-"};
    for (const auto& k : keys) {
      auto v = cell_value(row, k);
      line.push_back(v ? std::to_string(*v) : "-");
    }
    line.push_back(row.timed_out ? "-" : seconds_text(row.seconds));
    grid.push_back(line);
  }

  std::vector<size_t> widths(header.size(), 0);
  for (const auto& line : grid)
    for (size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());

  std::ostringstream out;
  for (size_t r = 0; r < grid.size(); ++r) {
    for (size_t i = 0; i < grid[r].size(); ++i) {
      out << std::left << std::setw(static_cast<int>(widths[i]) + 2) << grid[r][i];
    }
    out << "\n";
    if (r == 0) {
      size_t total = 0;
      for (size_t w : widths) total += w + 2;
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

}  // namespace dtls
