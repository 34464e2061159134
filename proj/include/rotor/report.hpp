#pragma once
// Result tables: CSV and JSON serialization with stable formatting, plus a
// small SVG writer for trajectory polylines.
//
// CSV layout is part of the tool's contract: fixed header, 12 significant
// digits, quoted args field, rows sorted by case id, pass as true/false.

#include <string>
#include <vector>

#include "rotor/geometry.hpp"

namespace rotor {

struct ReportRow {
  std::string case_id;
  std::string quantity;
  std::string args;
  double expected = 0.0;
  double computed = 0.0;
  double tol = 1e-9;
};

inline double row_abs_err(const ReportRow& r) {
  return std::abs(r.computed - r.expected);
}
inline bool row_pass(const ReportRow& r) { return row_abs_err(r) <= r.tol; }

// %.12g rendering used for every numeric CSV field.
std::string format_sig12(double v);

const std::string& csv_header();
std::string to_csv(std::vector<ReportRow> rows);   // sorts by case_id
std::string to_json(std::vector<ReportRow> rows);  // same order as the CSV
bool all_pass(const std::vector<ReportRow>& rows);

// Polyline as an SVG document, one line element per segment, viewBox fitted
// to the geometry with a small margin; an optional marker dot at `center`.
std::string to_svg(const Polyline& path, const Point* center = nullptr);

}  // namespace rotor
