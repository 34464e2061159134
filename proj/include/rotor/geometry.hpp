#pragma once
// Planar primitives and the winding integral.
//
// Angles are measured in turns (full revolutions) throughout the library;
// one turn is 2*pi radians.  The winding number of a polyline around a
// center is the sum of the signed angles subtended by its segments, which
// equals the integral of the polar angle form along the path as long as
// every segment subtends less than half a turn.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "rotor/errors.hpp"

namespace rotor {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Rotation by an angle given in turns.  The angle is reduced modulo 1
// before evaluating cos/sin, so rotation by an exact integer number of
// turns is exactly the identity.
inline Point rotate(Point p, double turns) {
  const double m = turns - std::round(turns);
  if (m == 0.0) return p;
  const double a = 2.0 * M_PI * m;
  const double c = std::cos(a), s = std::sin(a);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Principal angle of a nonzero vector, in turns, in [0, 1).
inline double principal_angle(Point v) {
  double a = std::atan2(v.y, v.x) / (2.0 * M_PI);
  if (a < 0.0) a += 1.0;
  if (a >= 1.0) a = 0.0;
  return a;
}

// Signed difference of two angles in turns, wrapped to (-1/2, 1/2].
inline double wrap_half(double turns) {
  double m = turns - std::round(turns);
  if (m <= -0.5) m += 1.0;
  return m;
}

// Piecewise-linear path.  params is the sampling parameter of each vertex:
// strictly increasing, params.front() == 0, params.back() == 1.
struct Polyline {
  std::vector<Point> vertices;
  std::vector<double> params;

  std::size_t segments() const {
    return vertices.size() < 2 ? 0 : vertices.size() - 1;
  }
};

void validate(const Polyline& p);

struct WindingValue {
  double turns = 0.0;             // total signed winding
  double max_segment_turn = 0.0;  // largest |subtended angle| over segments
};

// Signed angle subtended at `center` by the segment a -> b, in turns.
// Throws CenterOnPath when an endpoint is (numerically) the center and
// SegmentTooWide when the subtended angle reaches half a turn minus the
// guard band 1e-3.
double segment_turn(Point a, Point b, Point center);

// Winding of the polyline around `center`: the sum of segment angles.
WindingValue winding(const Polyline& path, Point center);

using Curve = std::function<Point(double)>;

struct RefineLimits {
  int max_segments = 1 << 20;  // hard budget; exceeding it is an error
  int min_depth = 5;           // mandatory initial bisection depth
  double center_rel_chord = 0.2;  // chord deviation cap relative to center distance
};

// Adaptive sampling of a continuous curve c : [0,1] -> R^2 into a polyline
// suitable for winding(path, center).  A parameter interval is accepted
// once (a) each half subtends at most max_turn, (b) the two halves agree
// with the parent angle (so no angular detour can hide between samples),
// and (c) the midpoint deviates from the chord by at most max_chord_err
// and by at most a fixed fraction of the distance to the center, which
// pins the homotopy class of the sampled curve.  Pass
// max_chord_err = infinity when only the winding matters.
Polyline refine(const Curve& c, Point center, double max_turn,
                double max_chord_err, RefineLimits lim = {});

// Refinement without a reference center: bisects until the midpoint chord
// deviation drops below max_chord_err (absolute).  Used for plotting and
// for building trajectories that are later measured against a center.
Polyline refine_plain(const Curve& c, double max_chord_err,
                      RefineLimits lim = {});

}  // namespace rotor
