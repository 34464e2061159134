#include "rotor/rotation.hpp"

#include <cmath>

namespace rotor {

LiftedPoint make_lifted(Point base, Point puncture) {
  const Point u = base - puncture;
  if (norm(u) == 0.0) fail(Err::CenterOnPath, "lifted point sits on the puncture");
  return {base, principal_angle(u), puncture};
}

LiftedPoint lift_step(const Isotopy& iso, const LiftedPoint& p) {
  const double incr = enlace(iso, p.base, p.puncture);
  LiftedPoint q;
  q.base = iso.map(p.base);
  q.theta_lift = p.theta_lift + incr;
  q.puncture = p.puncture;
  return q;
}

double rho_fixed(const Isotopy& iso, Point z, Point z2) {
  if (dist(iso.map(z), z) >= 1e-9) fail(Err::NotFixed, "z is not fixed");
  if (dist(iso.map(z2), z2) >= 1e-9) fail(Err::NotFixed, "z2 is not fixed");
  const double e = enlace(iso, z, z2);
  const double r = std::round(e);
  if (std::abs(e - r) >= 1e-6)
    fail(Err::NotInteger, "enlace of a fixed pair is not an integer");
  return r;
}

RotationEstimate rho_birkhoff(const Isotopy& iso, Point z, Point puncture,
                              double eps_return, long max_iter, double tol) {
  if (!(eps_return > 0.0) || max_iter < 1 || !(tol > 0.0))
    fail(Err::InvalidParams, "rho_birkhoff parameter out of range");
  if (dist(iso.map(puncture), puncture) >= 1e-9)
    fail(Err::NotFixed, "puncture is not fixed");

  RotationEstimate est;
  const double scale = std::max(1.0, norm(z));
  const double eps_exact = 1e-12 * scale;

  double sum = 0.0;       // accumulated enlace along the orbit
  Point w = z;
  for (long n = 1; n <= max_iter; ++n) {
    sum += enlace(iso, w, puncture);
    w = iso.map(w);
    const double gap = dist(w, z);
    if (gap < eps_return) {
      const double v = sum / static_cast<double>(n);
      if (gap < eps_exact && est.return_times.empty()) {
        // Exactly periodic: the average repeats verbatim on every further
        // period, so report it directly.
        est.return_times = {n, 2 * n, 3 * n};
        est.per_return_values = {v, v, v};
        est.value = v;
        est.residual = 0.0;
        est.converged = true;
        return est;
      }
      est.return_times.push_back(n);
      est.per_return_values.push_back(v);
      const std::size_t k = est.per_return_values.size();
      if (k >= 2)
        est.residual = std::abs(est.per_return_values[k - 1] -
                                est.per_return_values[k - 2]);
      if (k >= 3 && est.residual < tol) {
        est.value = est.per_return_values.back();
        est.converged = true;
        return est;
      }
    }
  }
  if (est.return_times.size() < 2)
    fail(Err::NoRecurrence, "orbit did not return near its start");
  est.value = est.per_return_values.back();
  est.converged = false;
  return est;
}

double rho_lift(const Isotopy& iso, Point z, Point puncture, int n) {
  if (n < 1) fail(Err::InvalidParams, "rho_lift needs n >= 1");
  LiftedPoint p = make_lifted(z, puncture);
  const double theta0 = p.theta_lift;
  for (int i = 0; i < n; ++i) p = lift_step(iso, p);
  return (p.theta_lift - theta0) / n;
}

double rho_relative(const Isotopy& iso, Point z, Point p1, Point p2, int n) {
  if (dist(iso.map(p1), p1) >= 1e-9) fail(Err::NotFixed, "p1 is not fixed");
  if (dist(iso.map(p2), p2) >= 1e-9) fail(Err::NotFixed, "p2 is not fixed");
  return rho_lift(iso, z, p1, n) - rho_lift(iso, z, p2, n);
}

}  // namespace rotor
