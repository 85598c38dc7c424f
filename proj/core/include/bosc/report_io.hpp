#ifndef BOSC_REPORT_IO_HPP
#define BOSC_REPORT_IO_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "bosc/simulation.hpp"

namespace bosc {

// Figure CSVs: header `tasks,candidates,strategy,<metric>_mean,<metric>_stddev,n_seeds`,
// one row per cell, LF line endings, '.' decimal separator. Cells that failed
// carry an `error` column value instead of numbers.
void write_figure_csv(std::ostream& out, const std::vector<CellReport>& cells,
                      const std::string& metric);
void write_figure_csv(const std::filesystem::path& file, const std::vector<CellReport>& cells,
                      const std::string& metric);

// Full suite dump (cells plus per-round traces when kept) as JSON; readable
// back for re-emitting figure CSVs.
std::string suite_to_json(const std::vector<CellReport>& cells);
void write_suite_json(const std::filesystem::path& file, const std::vector<CellReport>& cells);
std::vector<CellReport> parse_suite_json(const std::string& text);
std::vector<CellReport> load_suite_json(const std::filesystem::path& file);

// Deterministic float formatting used in all emitted CSVs.
std::string format_number(double v);

}  // namespace bosc

#endif  // BOSC_REPORT_IO_HPP
