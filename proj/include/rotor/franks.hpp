#pragma once
// Fixed-point certificates for annulus lifts via free-disk return windings.
//
// The end map of an isotopy fixing a puncture lifts to the universal cover
// of the punctured plane.  A round disk U disjoint from its image under the
// lifted map, together with one orbit returning to U with winding p >= 0
// and one with winding p' <= 0, certifies a fixed point of that lift.
// check_franks searches for such a pair of returns from a grid of seeds.

#include <optional>
#include <vector>

#include "rotor/isotopy.hpp"
#include "rotor/returns.hpp"
#include "rotor/rotation.hpp"

namespace rotor {

// Angle of w around `puncture` on the branch that is continuous over a
// disk not containing the puncture: within half a turn of the center's
// principal angle.  InvalidParams if the disk touches the puncture.
double branch_angle(const FreeDisk& disk, Point puncture, Point w);

// Lift of the end map composed with the deck translation T^{-lift_shift}.
struct AnnulusLift {
  Isotopy iso;  // already shifted: its canonical lift is the one meant
  Point puncture;
  long lift_shift = 0;

  LiftedPoint start(Point z) const;
  LiftedPoint step(const LiftedPoint& lp) const;
};

AnnulusLift make_annulus_lift(const Isotopy& iso, Point puncture,
                              long lift_shift);

struct FranksWitness {
  Point seed;
  long q = 0;       // return time, > 0
  long p = 0;       // lift winding at return
  double residual = 0.0;  // distance from the winding to its integer
};

struct FranksCertificate {
  FreeDisk disk;
  Point puncture;
  long lift_shift = 0;
  FranksWitness forward;   // p >= 0
  FranksWitness backward;  // p <= 0
};

struct FranksOptions {
  int n_boundary = 256;  // freeness samples on the disk boundary
  int n_grid = 16;       // freeness samples per interior grid axis
  int seed_grid = 12;    // orbit seeds per axis
  long q_max = 40;       // iteration horizon per seed
};

// Interior grid of seed points (n x n, clipped to the open disk).
std::vector<Point> seed_grid(const FreeDisk& disk, int n);

// Search for a certificate for the lift of the end map of `iso` shifted by
// T^{-lift_shift}.  Throws NotFree when a sampled point returns to the disk
// on the same lift branch (the free-disk hypothesis fails), InvalidParams
// when the puncture is not strictly outside the disk.  Returns nullopt when
// the disk is free but no certifying pair of returns appears within q_max.
std::optional<FranksCertificate> check_franks(const Isotopy& iso,
                                              const FreeDisk& disk,
                                              Point puncture, long lift_shift,
                                              const FranksOptions& opts = {});

// Re-run the two witness orbits of a certificate and confirm the recorded
// return times and windings.  Returns false on any mismatch.
bool revalidate(const Isotopy& iso, const FranksCertificate& cert,
                const FranksOptions& opts = {});

}  // namespace rotor
