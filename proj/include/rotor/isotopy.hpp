#pragma once
// Isotopies of the plane and their path invariants.
//
// An Isotopy is a continuous family f_t of plane homeomorphisms with
// f_0 = id; f_1 is the map of interest.  The two basic invariants are
//   tourne(z)      winding of t -> f_t(z) around the origin, and
//   enlace(z, z')  winding of t -> f_t(z) - f_t(z') around the origin,
// both in turns.  On pairs of fixed points of f_1 these are integers and
// depend only on the homotopy class of the isotopy; composing with a
// rigid rotation of k full turns (shift_class) adds exactly k to both.

#include <optional>

#include "rotor/geometry.hpp"

namespace rotor {

struct Isotopy {
  // f_t(z); must satisfy eval(0, z) == z up to rounding.
  std::function<Point(double, Point)> eval;
  // The end map f_1.  Defaults to eval(1, .); orbits iterate this.
  std::function<Point(Point)> map;
  // Optional inverse of the end map (empty when not available).
  std::function<Point(Point)> inverse;
  // Net number of full-turn twists applied via shift_class.
  int shift_k = 0;
};

// Wrap an evaluator (and optional end-map inverse) into an Isotopy.
Isotopy make_isotopy(std::function<Point(double, Point)> eval,
                     std::function<Point(Point)> inverse = nullptr);

// The identity isotopy (f_t = id for all t).
Isotopy identity_isotopy();

// Precompose with the rigid rotation family R_{k t}: f'_t = R_{k t} o f_t.
// The end map is unchanged (rotation by k full turns is the identity) but
// tourne gains k and enlace gains k on every pair, exactly.
Isotopy shift_class(const Isotopy& iso, int k);

// Conjugated isotopy g o f_t o g^{-1}.
Isotopy conjugate_isotopy(const Isotopy& iso,
                          std::function<Point(Point)> g,
                          std::function<Point(Point)> g_inv);

struct Trajectory {
  enum class Kind { absolute, relative };
  Polyline path;
  Point seed;
  Kind kind = Kind::absolute;
  Point rel_point{0, 0};  // the z' of a relative trajectory
};

// Sampled trajectory t -> f_t(z).  The polyline is refined so that later
// winding evaluations against any center at distance >= tol^(1/4) scale
// resolve; pass the center-specific helpers below when the center is known.
Trajectory trajectory(const Isotopy& iso, Point z, double tol = 1e-9);

// Winding of t -> f_t(z) around the origin, in turns.
double tourne(const Isotopy& iso, Point z, double tol = 1e-9);

// Winding of t -> f_t(z) - f_t(z') around the origin, in turns.
// z == z' is DiagonalInput.
double enlace(const Isotopy& iso, Point z, Point z2, double tol = 1e-9);

// Same quantity computed through the pinned family tau_t o f_t, where
// tau_t is the translation returning f_t(z2) to z2: the winding of
// t -> (f_t(z) - f_t(z2) + z2) around z2.  Requires z2 to be fixed by the
// end map (NotFixed otherwise); agrees with enlace() up to rounding.
double enlace_pinned(const Isotopy& iso, Point z, Point z2, double tol = 1e-9);

// Concatenation of the relative trajectories of z, f(z), ..., f^{n-1}(z)
// against z2, reparametrized to [0, 1].  z2 must be fixed (NotFixed).
Polyline orbit_relative_arc(const Isotopy& iso, Point z, Point z2, int n,
                            double tol = 1e-9);

// Winding cap used when refining isotopy trajectories.
inline constexpr double kTrajectoryMaxTurn = 0.1;

}  // namespace rotor
