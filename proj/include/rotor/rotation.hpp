#pragma once
// Rotation numbers around a fixed point.
//
// For a fixed point z' of f = f_1, the annular lift of f around z' advances
// the lifted angle of z by enlace(z, z') per step.  Averaging that advance
// along an orbit (over return times, or over a fixed horizon) produces the
// rotation number of the orbit around z'.

#include <vector>

#include "rotor/isotopy.hpp"

namespace rotor {

// A point of the universal cover of the plane punctured at `puncture`:
// the base point plus a continuous angle lift in turns.  Invariant:
// theta_lift mod 1 equals the angle of (base - puncture).
struct LiftedPoint {
  Point base;
  double theta_lift = 0.0;
  Point puncture;
};

LiftedPoint make_lifted(Point base, Point puncture);

// One step of the lifted dynamics: base moves by the end map, theta_lift
// grows by enlace(base, puncture).
LiftedPoint lift_step(const Isotopy& iso, const LiftedPoint& p);

// Rotation number of a fixed point z around a fixed point z2: enlace
// rounded to the nearest integer.  NotFixed if either point moves by
// 1e-9 or more; NotInteger if the enlace misses an integer by 1e-6.
double rho_fixed(const Isotopy& iso, Point z, Point z2);

struct RotationEstimate {
  double value = 0.0;
  std::vector<long> return_times;
  std::vector<double> per_return_values;
  double residual = 0.0;  // |last - previous| per-return average
  bool converged = false;
};

// Birkhoff-style estimate of the rotation number of z around `puncture`:
// average of the accumulated enlace over times when the orbit returns
// within eps_return of z.  Exactly periodic orbits short-circuit with the
// exact average.  NoRecurrence when fewer than two returns occur within
// max_iter steps.
RotationEstimate rho_birkhoff(const Isotopy& iso, Point z, Point puncture,
                              double eps_return = 1e-6,
                              long max_iter = 1000000, double tol = 1e-9);

// Fixed-horizon estimate: (theta_lift after n steps - theta_lift at start)/n.
// Agrees with rho_fixed exactly (up to rounding) when z is fixed.
double rho_lift(const Isotopy& iso, Point z, Point puncture, int n);

// Relative rotation number of z around two fixed points: the difference of
// the fixed-horizon estimates around p1 and p2.  Independent of the isotopy
// class (shift_class cancels).
double rho_relative(const Isotopy& iso, Point z, Point p1, Point p2, int n);

}  // namespace rotor
