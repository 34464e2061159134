#pragma once
// Built-in example systems.
//
// Each system packages an isotopy, an analytic description of the fixed
// set of its end map (as a sampler), invariant measures, and a table of
// reference values with known answers.  The systems:
//
//   ex1     rigid rotation of each circle of radius r by r turns
//   ex2     rotation of each circle by cos(pi r) turns
//   ex3     disjoint unit-spaced balls B_n; inside B_n each circle of
//           radius r turns by n * bump(r); identity elsewhere
//   ex4     same balls, all turning by theta0 * ramp(r): a plateau of
//           angle theta0 near each center, fading to 0 at the rim
//   ex5     twist r -> r + c sin^2(pi r) with angle advance r + 1/2;
//           integer circles are invariant with rotation number n + 1/2
//   ex5bis  angle advance 1/r + 1/2 with radial map pushing 1/n circles
//           toward 1/(n+1); rotation number n + 1/2 on radius 1/n
//   ex6     balls whose interiors converge to the radius-1/8 circle,
//           which turns by n + 1/2
//   drift   time-1 map of a strip flow with saturating horizontal drift
//           +-v0 and a vertical stir, conjugated to the punctured plane
//   twist   kicked twist with an isolated resonance at radius 2
//
// The samplers yield points whose end-map displacement is below 1e-9;
// for ex4 this includes near-center probes at radius 1e-10 inside the
// constant-angle plateau (displacement 2 r sin(pi theta0) <= 2e-10),
// which witness the supremum |theta0| of the linking form there.

#include <optional>
#include <string>
#include <vector>

#include "rotor/isotopy.hpp"
#include "rotor/measures.hpp"
#include "rotor/rng.hpp"

namespace rotor {

// Smooth profiles on [0, 1/4] built from exp(-1/x).
double mollifier(double x);     // exp(-1/x) for x > 0, else 0
double bump_plateau(double r);  // 0 outside (1/32, 7/32), equals 1 at 1/8
double ramp_down(double r);     // 1 on [0, 1/32], 0 on [7/32, infinity)

enum class ExampleId { Ex1, Ex2, Ex3, Ex4, Ex5, Ex5bis, Ex6, Drift, Twist };

struct ExampleParams {
  double theta0 = 0.3;  // ex4 plateau angle (nonzero, |theta0| <= 3)
  double c5 = 0.1;      // ex5 / ex5bis radial bump amplitude, in (0, 1/pi)
  double c6 = 20.0;     // ex6 radial cubic coefficient, in (0, 60]
  double v0 = 0.3;      // drift: asymptotic horizontal speed
  double c = 0.3;       // drift: vertical stir amplitude
  double ys = 0.2;      // drift: saturation height
  double kappa = 0.06;  // twist: kick amplitude
};

// Analytic sampler of the fixed set of the end map.
struct FixedSampler {
  // Random fixed point with modulus in [r_lo, r_hi]; nullopt when the
  // example has no fixed point in that shell.
  std::function<std::optional<Point>(Rng&, double, double)> draw_shell;
  // Stratified batch of fixed points with modulus <= R (at most `budget`).
  // Covers each analytic component so extremal pairs are always present.
  std::function<std::vector<Point>(Rng&, double, int)> cover_ball;
};

struct OracleCase {
  std::string id;        // sort key, unique within the whole table
  std::string quantity;  // "enlace", "tourne", "rho", "alpha", ...
  std::string args;
  double expected = 0.0;
  double tol = 1e-9;
  std::function<double()> compute;
};

struct ExampleSystem {
  std::string name;
  ExampleId id = ExampleId::Ex1;
  ExampleParams params;
  Isotopy isotopy;
  FixedSampler fixed;
  double safe_radius = 0.5;  // fixed points beyond it keep their distance
                             // from the origin along their trajectories
  std::vector<MeasureSampler> measures;
  std::vector<OracleCase> oracles;
};

ExampleSystem build_example(ExampleId id, const ExampleParams& params = {});
ExampleSystem build_example(const std::string& name,
                            const ExampleParams& params = {});
const std::vector<std::string>& example_names();

}  // namespace rotor
