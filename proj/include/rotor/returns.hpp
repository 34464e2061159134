#pragma once
// Free disks, first returns, and the return winding alpha.
//
// A disk U is free for f when f(U) and U are disjoint.  For z in U whose
// orbit re-enters U at time tau, alpha(z) is the winding around a fixed
// reference point z' accumulated along the orbit segments from z to the
// landing point F_U(z), closed up by the straight chord from F_U(z) back
// to z inside U.  The closed loop makes alpha an integer: it counts the
// deck translate relating the lifted disk to its return image.

#include <utility>
#include <vector>

#include "rotor/isotopy.hpp"

namespace rotor {

struct FreeDisk {
  Point center;
  double radius = 0.0;
  double margin = 0.0;  // verified clearance between f(U) and U
  int samples = 0;      // number of sample points behind the verification
};

// Semi-decision that the disk is free.  Checks n_boundary boundary points
// and an n_grid x n_grid interior grid; the reported margin is the least
// observed distance from image points to the disk, minus a slack for the
// sampling gaps (estimated from observed local displacement variation).
// Throws NotFree when a sampled image lands in (or indistinguishably
// close to) the disk.
FreeDisk verify_free(const std::function<Point(Point)>& f, FreeDisk disk,
                     int n_boundary = 256, int n_grid = 16);

struct ReturnData {
  long tau = 0;                 // first return time, >= 1
  Point landing;                // f^tau(z), inside the disk
  std::vector<Point> itinerary; // z, f(z), ..., f^tau(z)
};

// First return of z in U to U under iteration of f.  NoReturn if the orbit
// has not re-entered U after max_iter steps; InvalidParams if z is outside U.
ReturnData first_return(const std::function<Point(Point)>& f,
                        const FreeDisk& disk, Point z,
                        long max_iter = 1000000);

struct AlphaData {
  long value = 0;     // the integer alpha
  double raw = 0.0;   // winding before rounding
  double residual = 0.0;
  long tau = 0;
  Point landing;
};

// Return winding of z around `puncture` (a fixed point of the end map,
// outside U): sum of enlace along the orbit until the first return, plus
// the winding of the closing chord.  NotInteger if the result misses an
// integer by tol_int (the loop closes, so it must not).
AlphaData alpha_data(const Isotopy& iso, const FreeDisk& disk, Point puncture,
                     Point z, double tol_int = 1e-6, long max_iter = 1000000);

long alpha(const Isotopy& iso, const FreeDisk& disk, Point puncture, Point z,
           double tol_int = 1e-6, long max_iter = 1000000);

// The closed loop realizing alpha(z): orbit arcs relative to the puncture,
// closed by the chord from the landing point back to z.  Its winding around
// the origin equals alpha exactly (up to rounding).
Polyline alpha_loop(const Isotopy& iso, const FreeDisk& disk, Point puncture,
                    Point z, long max_iter = 1000000);

// Range of alpha/tau over the seeds that successfully return.
// EmptyInput when no seed yields a return.
std::pair<double, double> alpha_tau_range(const Isotopy& iso,
                                          const FreeDisk& disk, Point puncture,
                                          const std::vector<Point>& seeds,
                                          long max_iter = 100000);

bool disk_contains(const FreeDisk& disk, Point p);

}  // namespace rotor
