#include "rotor/report.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace rotor {

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const std::string& csv_header() {
  static const std::string h =
      "case,quantity,args,expected,computed,abs_err,pass";
  return h;
}

namespace {
void sort_rows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              return a.case_id < b.case_id;
            });
}
}  // namespace

std::string to_csv(std::vector<ReportRow> rows) {
  sort_rows(rows);
  std::string out = csv_header() + "\n";
  for (const ReportRow& r : rows) {
    out += r.case_id + "," + r.quantity + ",\"" + r.args + "\"," +
           format_sig12(r.expected) + "," + format_sig12(r.computed) + "," +
           format_sig12(row_abs_err(r)) + "," +
           (row_pass(r) ? "true" : "false") + "\n";
  }
  return out;
}

std::string to_json(std::vector<ReportRow> rows) {
  sort_rows(rows);
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    arr.push_back({{"case", r.case_id},
                   {"quantity", r.quantity},
                   {"args", r.args},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"abs_err", row_abs_err(r)},
                   {"pass", row_pass(r)}});
  }
  return arr.dump(2) + "\n";
}

bool all_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), row_pass);
}

std::string to_svg(const Polyline& path, const Point* center) {
  validate(path);
  double xlo = path.vertices[0].x, xhi = xlo;
  double ylo = path.vertices[0].y, yhi = ylo;
  for (const Point& p : path.vertices) {
    xlo = std::min(xlo, p.x); xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y); yhi = std::max(yhi, p.y);
  }
  if (center) {
    xlo = std::min(xlo, center->x); xhi = std::max(xhi, center->x);
    ylo = std::min(ylo, center->y); yhi = std::max(yhi, center->y);
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  const double m = 0.05 * span;
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                "viewBox=\"%.6g %.6g %.6g %.6g\">\n",
                xlo - m, -(yhi + m), (xhi - xlo) + 2 * m,
                (yhi - ylo) + 2 * m);
  out += buf;
  const double w = 0.004 * span;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Point a = path.vertices[i], b = path.vertices[i + 1];
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\" "
                  "stroke=\"black\" stroke-width=\"%.3g\"/>\n",
                  a.x, -a.y, b.x, -b.y, w);
    out += buf;
  }
  if (center) {
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.3g\" "
                  "fill=\"red\"/>\n",
                  center->x, -center->y, 2.5 * w);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rotor
