#ifndef DTLS_REPORT_HPP
#define DTLS_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dtls {

/// One labeled result cell; an empty value marks a timeout and renders as a
/// dash in the human table and an empty cell in the CSV.
struct ReportCell {
  std::string key;
  std::optional<int> errors;
};

struct ReportRow {
  std::string name;
  std::optional<int> initial;
  std::vector<ReportCell> cells;
  double seconds = 0.0;
  bool timed_out = false;
  std::string note;
};

/// Machine form: one header from the union of cell keys, one line per row.
void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out);

/// Human form: aligned columns, dashes for timeouts.
std::string format_report_table(const std::vector<ReportRow>& rows);

}  // namespace dtls

#endif
