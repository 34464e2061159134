#pragma once
// Numerical probes of the two boundedness properties of the linking and
// turning forms, the adapted shift of an isotopy class, and equivariance
// of rotation numbers under plane symmetries.
//
// The probes sample the analytic fixed set of an example system and report
// three-valued verdicts: a scan can confirm a violation (witnessed growth
// or spread), support the property (stable values across scales), or stay
// inconclusive when the evidence is marginal.

#include <vector>

#include "rotor/examples.hpp"

namespace rotor {

enum class Verdict { Holds, Violated, Inconclusive };
const char* verdict_name(Verdict v);

// Boundedness of the linking form over pairs of fixed points.
struct P1Report {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> stage_radius;  // R, 2R, 4R
  std::vector<double> stage_max;     // max |enlace| over sampled pairs
  long pairs_checked = 0;
};
P1Report scan_p1(const ExampleSystem& sys, double R, int budget, Rng& rng);

// Constancy of the turning form on fixed points far from the origin.
struct P2Report {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> shell_radius;  // sampled shells [r, 2r]
  std::vector<double> shell_value;   // representative value per shell
  double spread = 0.0;               // max - min over every sampled point
  long points_checked = 0;
};
P2Report scan_p2(const ExampleSystem& sys, const std::vector<double>& radii,
                 int per_shell, Rng& rng);

// The common integer value of the turning form on far fixed points: the
// shift that makes the isotopy class adapted.  Zero when the far fixed set
// is empty; NotConstant when sampled values disagree; NotInteger when the
// common value is not within tol of an integer.
long adapted_shift(const ExampleSystem& sys, double far_radius, int samples,
                   Rng& rng, double tol = 1e-6);

// A plane symmetry with its inverse and orientation.
struct PlaneMap {
  std::function<Point(Point)> fwd;
  std::function<Point(Point)> inv;
  bool orientation_preserving = true;
};

PlaneMap plane_rotation(double turns);
PlaneMap plane_reflection_x();  // (x, y) -> (x, -y)

struct SymmetryCheck {
  double conjugated = 0.0;  // rotation number after conjugating by g
  double reference = 0.0;   // +- the original, by orientation
  double diff = 0.0;
};

// Compare the lift-horizon rotation number of z around `puncture` with the
// one of g(z) around g(puncture) under the conjugated isotopy.  Verifies
// along the orbit that g conjugates the end map to itself (orientation
// preserving) or to its inverse (orientation reversing, requires
// iso.inverse); NotCommuting otherwise.
SymmetryCheck equivariance_check(const Isotopy& iso, const PlaneMap& g,
                                 Point z, Point puncture, long n);

}  // namespace rotor
