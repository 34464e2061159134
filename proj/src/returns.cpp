#include "rotor/returns.hpp"

#include <algorithm>
#include <cmath>

namespace rotor {

bool disk_contains(const FreeDisk& disk, Point p) {
  return dist(p, disk.center) <= disk.radius;
}

FreeDisk verify_free(const std::function<Point(Point)>& f, FreeDisk disk,
                     int n_boundary, int n_grid) {
  if (!(disk.radius > 0.0)) fail(Err::InvalidParams, "disk radius must be positive");
  if (n_boundary < 8 || n_grid < 2)
    fail(Err::InvalidParams, "verify_free needs n_boundary >= 8, n_grid >= 2");

  std::vector<Point> samples;
  samples.reserve(n_boundary + n_grid * n_grid);
  for (int i = 0; i < n_boundary; ++i) {
    const double a = static_cast<double>(i) / n_boundary;
    samples.push_back(disk.center + rotate(Point{disk.radius, 0.0}, a));
  }
  for (int i = 0; i < n_grid; ++i) {
    for (int j = 0; j < n_grid; ++j) {
      const Point p{disk.center.x + disk.radius * (2.0 * (i + 0.5) / n_grid - 1.0),
                    disk.center.y + disk.radius * (2.0 * (j + 0.5) / n_grid - 1.0)};
      if (dist(p, disk.center) <= disk.radius) samples.push_back(p);
    }
  }

  double min_clear = std::numeric_limits<double>::infinity();
  double max_disp = 0.0;
  std::vector<double> disp(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point img = f(samples[i]);
    if (!finite(img)) fail(Err::NonFiniteSample, "image sample is not finite");
    disp[i] = dist(img, samples[i]);
    max_disp = std::max(max_disp, disp[i]);
    min_clear = std::min(min_clear, dist(img, disk.center) - disk.radius);
  }
  // Displacement variation between neighbouring samples bounds how much the
  // clearance can dip between them; use it as sampling slack.
  double max_var = 0.0;
  for (int i = 0; i < n_boundary; ++i)
    max_var = std::max(max_var,
                       std::abs(disp[(i + 1) % n_boundary] - disp[i]));
  const double slack = 2.0 * max_var + disk.radius * 16.0 / n_boundary / n_grid;

  FreeDisk out = disk;
  out.samples = static_cast<int>(samples.size());
  out.margin = min_clear - slack;
  if (out.margin <= 0.0)
    fail(Err::NotFree, "disk image approaches the disk (margin <= 0)");
  return out;
}

ReturnData first_return(const std::function<Point(Point)>& f,
                        const FreeDisk& disk, Point z, long max_iter) {
  if (!disk_contains(disk, z)) fail(Err::InvalidParams, "seed lies outside the disk");
  ReturnData rd;
  rd.itinerary.push_back(z);
  Point w = z;
  for (long n = 1; n <= max_iter; ++n) {
    w = f(w);
    if (!finite(w)) fail(Err::NonFiniteSample, "orbit sample is not finite");
    rd.itinerary.push_back(w);
    if (n >= 1 && disk_contains(disk, w)) {
      rd.tau = n;
      rd.landing = w;
      return rd;
    }
  }
  fail(Err::NoReturn, "orbit did not return to the disk");
}

namespace {

// Winding of the straight chord a -> b around the puncture.
double chord_winding(Point a, Point b, Point puncture) {
  const Polyline seg = refine(
      [&](double t) { return (1.0 - t) * 1.0 * a + t * b; }, puncture,
      kTrajectoryMaxTurn, std::numeric_limits<double>::infinity());
  return winding(seg, puncture).turns;
}

}  // namespace

AlphaData alpha_data(const Isotopy& iso, const FreeDisk& disk, Point puncture,
                     Point z, double tol_int, long max_iter) {
  if (disk_contains(disk, puncture))
    fail(Err::InvalidParams, "puncture must lie outside the disk");
  if (dist(iso.map(puncture), puncture) >= 1e-9)
    fail(Err::NotFixed, "puncture is not fixed");
  const ReturnData rd = first_return(iso.map, disk, z, max_iter);

  double sum = 0.0;
  for (long r = 0; r < rd.tau; ++r)
    sum += enlace(iso, rd.itinerary[static_cast<std::size_t>(r)], puncture);
  if (dist(rd.landing, z) > 0.0)
    sum += chord_winding(rd.landing, z, puncture);

  AlphaData out;
  out.raw = sum;
  out.value = std::lround(sum);
  out.residual = std::abs(sum - static_cast<double>(out.value));
  out.tau = rd.tau;
  out.landing = rd.landing;
  if (out.residual >= tol_int)
    fail(Err::NotInteger, "return winding is not an integer");
  return out;
}

long alpha(const Isotopy& iso, const FreeDisk& disk, Point puncture, Point z,
           double tol_int, long max_iter) {
  return alpha_data(iso, disk, puncture, z, tol_int, max_iter).value;
}

Polyline alpha_loop(const Isotopy& iso, const FreeDisk& disk, Point puncture,
                    Point z, long max_iter) {
  if (disk_contains(disk, puncture))
    fail(Err::InvalidParams, "puncture must lie outside the disk");
  const ReturnData rd = first_return(iso.map, disk, z, max_iter);
  // Orbit arcs relative to the puncture over [0, s], closing chord on [s, 1].
  Polyline arcs = orbit_relative_arc(iso, z, puncture, static_cast<int>(rd.tau));
  const double s = static_cast<double>(rd.tau) / (rd.tau + 1.0);
  Polyline out;
  for (std::size_t i = 0; i < arcs.vertices.size(); ++i) {
    // Scaling by s can collapse params one ulp apart; drop such vertices.
    const double tp = arcs.params[i] * s;
    if (!out.params.empty() && tp <= out.params.back()) continue;
    out.params.push_back(tp);
    out.vertices.push_back(arcs.vertices[i]);
  }
  const Point a = rd.landing - puncture;
  const Point b = z - puncture;
  if (dist(a, b) > 0.0) {
    const Polyline chord = refine(
        [&](double t) { return (1.0 - t) * a + t * b; }, Point{0, 0},
        kTrajectoryMaxTurn, std::numeric_limits<double>::infinity());
    for (std::size_t i = 1; i < chord.vertices.size(); ++i) {
      const double tp = (i + 1 == chord.vertices.size())
                            ? 1.0
                            : s + (1.0 - s) * chord.params[i];
      if (tp <= out.params.back()) continue;
      out.params.push_back(tp);
      out.vertices.push_back(chord.vertices[i]);
    }
  } else {
    out.params.back() = 1.0;  // orbit landed exactly on z; loop already closed
  }
  if (out.params.back() != 1.0) {
    out.params.push_back(1.0);
    out.vertices.push_back(b);
  }
  validate(out);
  return out;
}

std::pair<double, double> alpha_tau_range(const Isotopy& iso,
                                          const FreeDisk& disk, Point puncture,
                                          const std::vector<Point>& seeds,
                                          long max_iter) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  long ok = 0;
  for (const Point& s : seeds) {
    if (!disk_contains(disk, s)) continue;
    try {
      const AlphaData a = alpha_data(iso, disk, puncture, s, 1e-6, max_iter);
      const double ratio = static_cast<double>(a.value) / a.tau;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      ++ok;
    } catch (const RotorError& e) {
      if (e.code() != Err::NoReturn) throw;
    }
  }
  if (ok == 0) fail(Err::EmptyInput, "no seed produced a return");
  return {lo, hi};
}

}  // namespace rotor
