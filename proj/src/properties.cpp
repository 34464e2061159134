#include "rotor/properties.hpp"

#include <algorithm>
#include <cmath>

#include "rotor/rotation.hpp"

namespace rotor {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

P1Report scan_p1(const ExampleSystem& sys, double R, int budget, Rng& rng) {
  if (!(R > 0.0) || budget < 2)
    fail(Err::InvalidParams, "scan_p1 needs R > 0 and budget >= 2");
  P1Report rep;
  for (double radius : {R, 2.0 * R, 4.0 * R}) {
    const std::vector<Point> pts = sys.fixed.cover_ball(rng, radius, budget);
    double stage = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (dist(pts[i], pts[j]) < 1e-12) continue;
        stage = std::max(stage, std::abs(enlace(sys.isotopy, pts[i], pts[j])));
        ++rep.pairs_checked;
      }
    rep.stage_radius.push_back(radius);
    rep.stage_max.push_back(stage);
  }
  // Sustained growth across both doublings witnesses unboundedness; a
  // settled last doubling supports the bound.  A transient (values still
  // filling in at small radii) stays inconclusive.
  const double early = rep.stage_max[1] - rep.stage_max[0];
  const double late = rep.stage_max[2] - rep.stage_max[1];
  if (early > 0.5 && late > 0.5)
    rep.verdict = Verdict::Violated;
  else if (std::abs(late) <= 0.25)
    rep.verdict = Verdict::Holds;
  return rep;
}

P2Report scan_p2(const ExampleSystem& sys, const std::vector<double>& radii,
                 int per_shell, Rng& rng) {
  if (radii.empty() || per_shell < 1)
    fail(Err::InvalidParams, "scan_p2 needs shells and per_shell >= 1");
  P2Report rep;
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (double r : radii) {
    if (!(r > 0.0)) fail(Err::InvalidParams, "shell radii must be positive");
    std::vector<double> vals;
    for (int i = 0; i < per_shell; ++i) {
      const auto p = sys.fixed.draw_shell(rng, r, 2.0 * r);
      if (!p) continue;
      vals.push_back(tourne(sys.isotopy, *p));
    }
    if (vals.empty()) continue;
    rep.shell_radius.push_back(r);
    rep.shell_value.push_back(vals.front());
    for (double v : vals) {
      if (!any) { lo = hi = v; any = true; }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    rep.points_checked += static_cast<long>(vals.size());
  }
  rep.spread = any ? hi - lo : 0.0;
  // No far fixed points at all: constancy holds vacuously.
  if (!any) { rep.verdict = Verdict::Holds; return rep; }
  if (rep.spread < 1e-6)
    rep.verdict = Verdict::Holds;
  else if (rep.spread > 0.5)
    rep.verdict = Verdict::Violated;
  return rep;
}

long adapted_shift(const ExampleSystem& sys, double far_radius, int samples,
                   Rng& rng, double tol) {
  if (!(far_radius > 0.0) || samples < 1)
    fail(Err::InvalidParams, "adapted_shift needs a positive radius and count");
  bool any = false;
  double common = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto p = sys.fixed.draw_shell(rng, far_radius, 2.0 * far_radius);
    if (!p) continue;
    const double v = tourne(sys.isotopy, *p);
    if (!any) { common = v; any = true; continue; }
    if (std::abs(v - common) > tol)
      fail(Err::NotConstant, "turning form varies on far fixed points");
  }
  if (!any) return 0;
  const double rounded = std::round(common);
  if (std::abs(common - rounded) > tol)
    fail(Err::NotInteger, "far turning value is not an integer");
  return static_cast<long>(rounded);
}

PlaneMap plane_rotation(double turns) {
  return {[turns](Point p) { return rotate(p, turns); },
          [turns](Point p) { return rotate(p, -turns); }, true};
}

PlaneMap plane_reflection_x() {
  auto refl = [](Point p) { return Point{p.x, -p.y}; };
  return {refl, refl, false};
}

SymmetryCheck equivariance_check(const Isotopy& iso, const PlaneMap& g,
                                 Point z, Point puncture, long n) {
  if (n < 1) fail(Err::InvalidParams, "horizon must be positive");
  if (!g.orientation_preserving && !iso.inverse)
    fail(Err::InvalidParams,
         "orientation-reversing check needs an invertible map");
  // Spot-check the conjugation relation along the orbit of z.
  Point w = z;
  const long checks = std::min<long>(n, 16);
  for (long i = 0; i < checks; ++i) {
    const double scale = std::max(1.0, norm(w));
    const Point lhs = g.fwd(iso.map(w));
    const Point rhs = g.orientation_preserving ? iso.map(g.fwd(w))
                                               : iso.inverse(g.fwd(w));
    if (dist(lhs, rhs) > 1e-9 * scale)
      fail(Err::NotCommuting, "map does not conjugate the dynamics to itself");
    w = iso.map(w);
  }
  const Isotopy conj = conjugate_isotopy(iso, g.fwd, g.inv);
  SymmetryCheck out;
  out.conjugated = rho_lift(conj, g.fwd(z), g.fwd(puncture), n);
  const double base = rho_lift(iso, z, puncture, n);
  out.reference = g.orientation_preserving ? base : -base;
  out.diff = std::abs(out.conjugated - out.reference);
  return out;
}

}  // namespace rotor
