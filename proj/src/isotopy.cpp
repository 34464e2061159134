#include "rotor/isotopy.hpp"

#include <cmath>
#include <utility>

namespace rotor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_fixed(const Isotopy& iso, Point z, const char* what) {
  const Point w = iso.map(z);
  if (dist(w, z) >= 1e-9)
    fail(Err::NotFixed, std::string(what) + " must be fixed by the end map");
}

}  // namespace

Isotopy make_isotopy(std::function<Point(double, Point)> eval,
                     std::function<Point(Point)> inverse) {
  Isotopy iso;
  iso.eval = std::move(eval);
  iso.map = [e = iso.eval](Point z) { return e(1.0, z); };
  iso.inverse = std::move(inverse);
  iso.shift_k = 0;
  return iso;
}

Isotopy identity_isotopy() {
  return make_isotopy([](double, Point z) { return z; },
                      [](Point z) { return z; });
}

Isotopy shift_class(const Isotopy& iso, int k) {
  Isotopy out;
  out.eval = [e = iso.eval, k](double t, Point z) {
    return rotate(e(t, z), k * t);
  };
  out.map = iso.map;  // rotation by k full turns is the identity
  out.inverse = iso.inverse;
  out.shift_k = iso.shift_k + k;
  return out;
}

Isotopy conjugate_isotopy(const Isotopy& iso,
                          std::function<Point(Point)> g,
                          std::function<Point(Point)> g_inv) {
  Isotopy out;
  out.eval = [e = iso.eval, g, g_inv](double t, Point z) {
    return g(e(t, g_inv(z)));
  };
  out.map = [m = iso.map, g, g_inv](Point z) { return g(m(g_inv(z))); };
  if (iso.inverse)
    out.inverse = [inv = iso.inverse, g, g_inv](Point z) {
      return g(inv(g_inv(z)));
    };
  out.shift_k = iso.shift_k;
  return out;
}

Trajectory trajectory(const Isotopy& iso, Point z, double tol) {
  if (!(tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  Trajectory tr;
  tr.seed = z;
  tr.kind = Trajectory::Kind::absolute;
  const Point z0 = z;
  // Chord tolerance scales with the size of the motion so still points
  // produce two-vertex paths instead of infinite refinement.
  const double scale =
      std::max({1e-12, dist(iso.eval(0.5, z0), z0), dist(iso.map(z0), z0)});
  tr.path = refine_plain([&](double t) { return iso.eval(t, z0); },
                         std::max(tol, 1e-3 * scale));
  return tr;
}

double tourne(const Isotopy& iso, Point z, double tol) {
  if (!(tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  const Polyline p = refine([&](double t) { return iso.eval(t, z); },
                            Point{0, 0}, kTrajectoryMaxTurn, kInf);
  return winding(p, Point{0, 0}).turns;
}

double enlace(const Isotopy& iso, Point z, Point z2, double tol) {
  if (!(tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  if (z.x == z2.x && z.y == z2.y)
    fail(Err::DiagonalInput, "enlace requires two distinct points");
  const Polyline p =
      refine([&](double t) { return iso.eval(t, z) - iso.eval(t, z2); },
             Point{0, 0}, kTrajectoryMaxTurn, kInf);
  return winding(p, Point{0, 0}).turns;
}

double enlace_pinned(const Isotopy& iso, Point z, Point z2, double tol) {
  if (!(tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  if (z.x == z2.x && z.y == z2.y)
    fail(Err::DiagonalInput, "enlace requires two distinct points");
  check_fixed(iso, z2, "pinned reference point");
  const Polyline p =
      refine([&](double t) { return iso.eval(t, z) - iso.eval(t, z2) + z2; },
             z2, kTrajectoryMaxTurn, kInf);
  return winding(p, z2).turns;
}

Polyline orbit_relative_arc(const Isotopy& iso, Point z, Point z2, int n,
                            double tol) {
  if (n < 1) fail(Err::InvalidParams, "orbit arc needs n >= 1");
  if (!(tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  check_fixed(iso, z2, "relative reference point");
  Polyline out;
  Point w = z;
  for (int r = 0; r < n; ++r) {
    const Point wr = w;
    const Polyline leg =
        refine([&](double t) { return iso.eval(t, wr) - iso.eval(t, z2); },
               Point{0, 0}, kTrajectoryMaxTurn, kInf);
    const double lo = static_cast<double>(r) / n;
    const double span = 1.0 / n;
    for (std::size_t i = 0; i < leg.vertices.size(); ++i) {
      const double tp = (r == n - 1 && i + 1 == leg.vertices.size())
                            ? 1.0
                            : lo + span * leg.params[i];
      if (!out.params.empty() && tp <= out.params.back()) continue;
      out.params.push_back(tp);
      out.vertices.push_back(leg.vertices[i]);
    }
    w = iso.map(wr);
  }
  validate(out);
  return out;
}

}  // namespace rotor
