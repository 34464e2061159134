#include "rotor/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace rotor {

namespace {

constexpr double kHalfGuard = 1e-3;  // guard band below half a turn

// Angle subtended at center, plus the failure flags, without throwing.
struct SegAngle {
  double turns = 0.0;
  bool too_wide = false;
  bool on_center = false;
};

SegAngle seg_angle(Point a, Point b, Point center) {
  const Point u = a - center;
  const Point w = b - center;
  const double ru = norm(u), rw = norm(w);
  const double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x),
                                 std::abs(b.y), std::abs(center.x),
                                 std::abs(center.y)});
  const double tiny = scale * 1e-14 + std::numeric_limits<double>::min();
  SegAngle r;
  if (ru <= tiny || rw <= tiny) {
    r.on_center = true;
    return r;
  }
  r.turns = std::atan2(cross(u, w), dot(u, w)) / (2.0 * M_PI);
  if (std::abs(r.turns) >= 0.5 - kHalfGuard) r.too_wide = true;
  return r;
}

}  // namespace

void validate(const Polyline& p) {
  if (p.vertices.size() < 2) fail(Err::EmptyInput, "polyline needs at least 2 vertices");
  if (p.params.size() != p.vertices.size())
    fail(Err::InvalidParams, "polyline params/vertices size mismatch");
  if (p.params.front() != 0.0 || p.params.back() != 1.0)
    fail(Err::InvalidParams, "polyline params must span [0, 1]");
  for (std::size_t i = 1; i < p.params.size(); ++i)
    if (!(p.params[i] > p.params[i - 1]))
      fail(Err::InvalidParams, "polyline params must be strictly increasing");
  for (const Point& v : p.vertices)
    if (!finite(v)) fail(Err::NonFiniteSample, "polyline vertex is not finite");
}

double segment_turn(Point a, Point b, Point center) {
  const SegAngle s = seg_angle(a, b, center);
  if (s.on_center) fail(Err::CenterOnPath, "segment endpoint coincides with the center");
  if (s.too_wide) fail(Err::SegmentTooWide, "segment subtends at least half a turn");
  return s.turns;
}

WindingValue winding(const Polyline& path, Point center) {
  validate(path);
  WindingValue w;
  double sum = 0.0, comp = 0.0;  // Kahan compensation
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const double t = segment_turn(path.vertices[i], path.vertices[i + 1], center);
    w.max_segment_turn = std::max(w.max_segment_turn, std::abs(t));
    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  w.turns = sum;
  return w;
}

namespace {

struct Refiner {
  const Curve& c;
  Point center;
  bool has_center;
  double max_turn;
  double max_chord_err;
  RefineLimits lim;
  double consistency_tol;
  Polyline out;
  long nodes = 0;

  void emit(double t, Point p) {
    out.params.push_back(t);
    out.vertices.push_back(p);
  }

  bool interval_ok(Point p0, Point pm, Point p1) const {
    // Chord criterion: midpoint close to the chord midpoint.
    const Point chord_mid = 0.5 * (p0 + p1);
    const double dev = dist(pm, chord_mid);
    if (dev > max_chord_err) return false;
    if (!has_center) return true;

    const SegAngle parent = seg_angle(p0, p1, center);
    const SegAngle left = seg_angle(p0, pm, center);
    const SegAngle right = seg_angle(pm, p1, center);
    if (parent.on_center || left.on_center || right.on_center)
      fail(Err::CenterOnPath, "curve passes through the winding center");
    if (parent.too_wide || left.too_wide || right.too_wide) return false;
    if (std::abs(left.turns) > max_turn || std::abs(right.turns) > max_turn)
      return false;
    // Angular consistency between the two sampling depths guards against
    // detours hiding between samples.
    if (std::abs(left.turns + right.turns - parent.turns) > consistency_tol)
      return false;
    // Homotopy guard: the sampled chord stays well away from the center
    // relative to its own size.
    const double d = std::min({dist(p0, center), dist(pm, center), dist(p1, center)});
    if (dev > lim.center_rel_chord * d) return false;
    return true;
  }

  void run(double t0, Point p0, double t1, Point p1, int depth) {
    if (++nodes > lim.max_segments)
      fail(Err::RefinementBudgetExceeded,
           "refinement exceeded its segment budget");
    const double tm = 0.5 * (t0 + t1);
    const Point pm = c(tm);
    if (!finite(pm)) fail(Err::NonFiniteSample, "curve sample is not finite");
    if (depth >= lim.min_depth && interval_ok(p0, pm, p1)) {
      emit(tm, pm);
      emit(t1, p1);
      return;
    }
    if (depth > 60)
      fail(Err::RefinementBudgetExceeded, "refinement exceeded depth 60");
    run(t0, p0, tm, pm, depth + 1);
    // left half emitted its interior and endpoint; continue with the right
    run(tm, pm, t1, p1, depth + 1);
  }

  Polyline refine_all() {
    const Point p0 = c(0.0), p1 = c(1.0);
    if (!finite(p0) || !finite(p1))
      fail(Err::NonFiniteSample, "curve endpoint is not finite");
    emit(0.0, p0);
    run(0.0, p0, 1.0, p1, 0);
    // Collapse duplicate parameters that can arise from emitting shared
    // endpoints (defensive; the recursion above emits each t once).
    validate(out);
    return std::move(out);
  }
};

}  // namespace

Polyline refine(const Curve& c, Point center, double max_turn,
                double max_chord_err, RefineLimits lim) {
  if (!(max_turn > 0.0) || max_turn >= 0.5 - 1e-3)
    fail(Err::InvalidParams, "max_turn must lie in (0, 0.5 - 1e-3)");
  Refiner r{c, center, true, max_turn, max_chord_err, lim,
            std::max(1e-10, 5e-3 * max_turn), {}, 0};
  return r.refine_all();
}

Polyline refine_plain(const Curve& c, double max_chord_err, RefineLimits lim) {
  if (!(max_chord_err > 0.0))
    fail(Err::InvalidParams, "max_chord_err must be positive");
  Refiner r{c, Point{0, 0}, false, 0.25, max_chord_err, lim, 1.0, {}, 0};
  return r.refine_all();
}

}  // namespace rotor
