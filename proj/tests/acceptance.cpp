// Acceptance suite: every contract criterion as one pass/fail line.
// Deterministic, single threaded, finishes well inside a minute.
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "rotor/examples.hpp"
#include "rotor/franks.hpp"
#include "rotor/measures.hpp"
#include "rotor/properties.hpp"
#include "rotor/returns.hpp"

using namespace rotor;

namespace {

int failures = 0;

void report(int num, const char* desc, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, desc,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int num, const char* desc, Fn&& fn) {
  try {
    std::string detail;
    const bool ok = fn(detail);
    report(num, desc, ok, detail);
  } catch (const std::exception& e) {
    report(num, desc, false, e.what());
  }
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// --- criterion bodies -------------------------------------------------------

bool c1_rigid_invariants(std::string& detail) {
  const ExampleSystem sys = build_example("ex1");
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const Point z{static_cast<double>(n), 0.0};
    worst = std::max(worst, std::abs(enlace(sys.isotopy, z, {0, 0}) - n));
    worst = std::max(worst, std::abs(tourne(sys.isotopy, z) - n));
  }
  detail = fmt("max |err| = %.3g", worst);
  return worst < 1e-9;
}

bool c2_oscillating_family(std::string& detail) {
  const ExampleSystem sys = build_example("ex2");
  double worst_t = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const double expect = (n % 2 == 0) ? 1.0 : -1.0;
    worst_t = std::max(
        worst_t,
        std::abs(tourne(sys.isotopy, {static_cast<double>(n), 0}) - expect));
  }
  double worst_e = 0.0;
  Rng rng(201);
  int pairs = 0;
  while (pairs < 20) {
    const auto a = sys.fixed.draw_shell(rng, 0.5, 3.5);
    const auto b = sys.fixed.draw_shell(rng, 0.5, 3.5);
    if (!a || !b || dist(*a, *b) < 1e-6) continue;
    ++pairs;
    const double expect =
        std::cos(M_PI * std::max(dist(*a, {0, 0}), dist(*b, {0, 0})));
    worst_e = std::max(worst_e,
                       std::abs(enlace(sys.isotopy, *a, *b) - expect));
  }
  detail = fmt("tourne err %.3g, enlace err %.3g", worst_t, worst_e);
  return worst_t < 1e-9 && worst_e < 1e-6;
}

bool c3_integer_balls(std::string& detail) {
  const ExampleSystem sys = build_example("ex3");
  double worst = 0.0;
  for (int n = -3; n <= 3; ++n) {
    const Point z{static_cast<double>(n), 0.0};
    const Point z2{n + 0.125, 0.0};
    worst = std::max(worst, std::abs(enlace(sys.isotopy, z, z2) - n));
  }
  if (worst >= 1e-9) {
    detail = fmt("linking err %.3g", worst);
    return false;
  }
  // Turning vanishes on fixed points away from the ball at the origin.
  Rng rng(202);
  double worst_t = 0.0;
  int found = 0;
  for (int i = 0; i < 200 && found < 20; ++i) {
    const auto p = sys.fixed.draw_shell(rng, 0.3, 3.0);
    if (!p || dist(*p, {0, 0}) <= 0.26) continue;
    ++found;
    worst_t = std::max(worst_t, std::abs(tourne(sys.isotopy, *p)));
  }
  Rng rng2(203);
  const P1Report p1 = scan_p1(sys, sys.safe_radius, 12, rng2);
  const P2Report p2 = scan_p2(sys, {0.5, 1.0, 2.0}, 24, rng2);
  detail = fmt("linking err %.3g, turning err %.3g", worst, worst_t) +
           ", p1 " + verdict_name(p1.verdict) + ", p2 " +
           verdict_name(p2.verdict);
  return found == 20 && worst_t < 1e-9 &&
         p1.verdict == Verdict::Violated && p2.verdict == Verdict::Holds;
}

bool c4_plateau_family(std::string& detail) {
  const ExampleSystem sys = build_example("ex4");
  const double theta0 = sys.params.theta0;
  Rng rng(204);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Point z, z2;
    double expect = 0.0;
    const int cls = trial % 3;
    const double nd = static_cast<double>(rng.uniform_int(-2, 2));
    const Point c{nd, 0.0};
    if (cls == 0) {  // same ball, equal radii: enlace = theta0 * ramp(r)
      const double r = rng.uniform(0.003, 0.21);
      z = c + rotate(Point{r, 0}, rng.uniform01());
      z2 = c + rotate(Point{r, 0}, rng.uniform01());
      if (dist(z, z2) < 1e-9) {
        --trial;
        continue;
      }
      expect = theta0 * ramp_down(r);
    } else if (cls == 1) {  // same ball, both radii in the plateau
      z = c + rotate(Point{rng.uniform(0.003, 0.031), 0}, rng.uniform01());
      z2 = c + rotate(Point{rng.uniform(0.003, 0.031), 0}, rng.uniform01());
      if (dist(z, z2) < 1e-9) {
        --trial;
        continue;
      }
      expect = theta0;
    } else {  // genuinely fixed pair: off the supports entirely
      auto far_point = [&rng](double shift) {
        for (;;) {
          const Point p{shift + rng.uniform(-0.5, 0.5),
                        rng.uniform(-0.5, 0.5)};
          if (dist(p, {std::round(p.x), 0.0}) > 0.26) return p;
        }
      };
      z = far_point(0.0);
      z2 = far_point(1.0);
      expect = 0.0;
    }
    worst = std::max(worst, std::abs(enlace(sys.isotopy, z, z2) - expect));
  }

  Rng rng2(205);
  const P1Report p1 = scan_p1(sys, sys.safe_radius, 12, rng2);
  double stage_max = 0.0;
  for (double m : p1.stage_max) stage_max = std::max(stage_max, m);
  const double sup_err = std::abs(stage_max - std::abs(theta0));

  double commute = 0.0;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const Point z{0.4 * i, 0.4 * j};
      const Point a = sys.isotopy.map({z.x + 1, z.y});
      const Point b = sys.isotopy.map(z);
      commute = std::max(commute, dist(a, {b.x + 1, b.y}));
    }
  detail = fmt("pair err %.3g, sup err %.3g", worst, sup_err) +
           fmt(", translation defect %.3g", commute);
  return worst < 1e-6 && sup_err < 1e-6 && commute <= 1e-12;
}

bool c5_rotation_numbers(std::string& detail) {
  double worst = 0.0, worst_lift = 0.0;
  bool even_returns = true;
  auto check = [&](const Isotopy& iso, Point seed, Point puncture,
                   double expect) {
    const RotationEstimate est = rho_birkhoff(iso, seed, puncture);
    worst = std::max(worst, std::abs(est.value - expect));
    if (!est.converged) worst = std::max(worst, 1.0);
    for (long t : est.return_times)
      if (t % 2 != 0) even_returns = false;
    worst_lift =
        std::max(worst_lift,
                 std::abs(rho_lift(iso, seed, puncture, 6) - est.value));
  };
  const ExampleSystem ex5 = build_example("ex5");
  for (int n = 1; n <= 4; ++n)
    check(ex5.isotopy, rotate(Point{static_cast<double>(n), 0}, 0.1), {0, 0},
          n + 0.5);
  const ExampleSystem ex5bis = build_example("ex5bis");
  for (int n = 1; n <= 4; ++n)
    check(ex5bis.isotopy, rotate(Point{1.0 / n, 0}, 0.37), {0, 0}, n + 0.5);
  const ExampleSystem ex6 = build_example("ex6");
  for (int n = 1; n <= 4; ++n) {
    const Point zn{static_cast<double>(n), 0.0};
    check(ex6.isotopy, zn + rotate(Point{0.125, 0}, 0.21), zn, n + 0.5);
  }
  detail = fmt("rho err %.3g, lift gap %.3g", worst, worst_lift) +
           (even_returns ? ", returns all even" : ", odd return seen");
  return worst < 1e-9 && worst_lift < 1e-6 && even_returns;
}

bool c6_class_shift_laws(std::string& detail) {
  double worst = 0.0;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) {
    const ExampleSystem sys = build_example(name);
    const Point z{1.0, 0.0}, z2{0.37, 0.11};
    const double e0 = enlace(sys.isotopy, z, z2);
    const double t0 = tourne(sys.isotopy, z);
    for (int k = -3; k <= 3; ++k) {
      const Isotopy s = shift_class(sys.isotopy, k);
      worst = std::max(worst, std::abs(enlace(s, z, z2) - (e0 + k)));
      worst = std::max(worst, std::abs(tourne(s, z) - (t0 + k)));
    }
  }
  detail = fmt("max |err| = %.3g", worst);
  return worst < 1e-9;
}

bool c7_alpha_integrality(std::string& detail) {
  int cases = 0;
  double worst_res = 0.0, worst_loop = 0.0;
  long named_alpha = 0;

  // 170 randomized disks on the rigid rotation.
  const ExampleSystem ex1 = build_example("ex1");
  Rng rng(207);
  while (cases < 170) {
    const double a =
        static_cast<double>(rng.uniform_int(1, 2)) + rng.uniform(0.3, 0.7);
    const double R = rng.uniform(0.02, 0.1);
    FreeDisk disk{rotate(Point{a, 0}, rng.uniform01()), R};
    disk = verify_free(ex1.isotopy.map, disk);
    const Point z =
        disk.center + rotate(Point{rng.uniform(0.0, 0.5 * R), 0},
                             rng.uniform01());
    const AlphaData ad = alpha_data(ex1.isotopy, disk, {0, 0}, z);
    worst_res = std::max(worst_res, ad.residual);
    const Polyline loop = alpha_loop(ex1.isotopy, disk, {0, 0}, z);
    worst_loop = std::max(
        worst_loop, std::abs(winding(loop, {0, 0}).turns -
                             static_cast<double>(ad.value)));
    ++cases;
  }

  // 29 seeds on the invariant circles of the twist family: alpha = 2m + 1.
  const ExampleSystem ex5 = build_example("ex5");
  bool odd_law = true;
  for (int i = 0; i < 29; ++i) {
    const int m = 1 + i % 3;
    const FreeDisk disk{{static_cast<double>(m), 0}, 0.1};
    const double arc = std::asin(0.05 / m) / (2 * M_PI);
    const Point z = rotate(Point{static_cast<double>(m), 0},
                           rng.uniform(-0.8 * arc, 0.8 * arc));
    const AlphaData ad = alpha_data(ex5.isotopy, disk, {0, 0}, z);
    worst_res = std::max(worst_res, ad.residual);
    if (ad.value != 2 * m + 1) odd_law = false;
    const Polyline loop = alpha_loop(ex5.isotopy, disk, {0, 0}, z);
    worst_loop = std::max(
        worst_loop, std::abs(winding(loop, {0, 0}).turns -
                             static_cast<double>(ad.value)));
    ++cases;
  }

  // The named case: the disk on the half-integer circle returns with 3.
  named_alpha =
      alpha(ex1.isotopy, {{1.5, 0}, 0.1}, {0, 0}, rotate(Point{1.5, 0}, 0.01));
  ++cases;

  detail = fmt("%g cases, residual %.3g", static_cast<double>(cases),
               worst_res) +
           fmt(", loop gap %.3g", worst_loop);
  return cases == 200 && worst_res < 1e-6 && worst_loop < 1e-6 && odd_law &&
         named_alpha == 3;
}

bool c8_return_speed_range(std::string& detail) {
  const ExampleSystem sys = build_example("ex4");
  // A small disk in the fade region of the origin ball; orbits there turn
  // around the ball center, which doubles as the puncture.
  const FreeDisk disk = verify_free(sys.isotopy.map, {{0.1, 0}, 0.01});
  Rng rng(208);
  std::vector<Point> seeds;
  while (seeds.size() < 100) {
    const Point s = disk.center + rotate(Point{rng.uniform(0.0, 0.009), 0},
                                         rng.uniform01());
    seeds.push_back(s);
  }
  const auto [lo, hi] = alpha_tau_range(sys.isotopy, disk, {0, 0}, seeds);
  const double spread = hi - lo;
  // sup |enlace| = |theta0| < 1, so the admissible spread bound is 2*1 + 4.
  detail = fmt("alpha/tau in [%.4f, %.4f]", lo, hi) +
           fmt(", spread %.4f <= 6", spread);
  return spread <= 6.0 && lo > 0.0;
}

bool c9_measure_identity(std::string& detail) {
  const long n = 100000;

  // Rigid rotation, disk on the half-integer circle, arc-length measure on
  // the cut arc and its half-turn image.
  const ExampleSystem ex1 = build_example("ex1");
  const double R = 0.1, a = 1.5;
  const FreeDisk disk{{a, 0}, R};
  const double phi_star = 2 * std::asin(R / (2 * a));  // radians, half-angle
  const double arc_turns = phi_star / (2 * M_PI);
  const double mass = 2 * (a * 2 * phi_star);  // both arcs, arc length
  const MeasureSampler arcs =
      two_arcs_measure({0, 0}, a, -arc_turns + 1e-12, arc_turns - 1e-12,
                       0.5 - arc_turns + 1e-12, 0.5 + arc_turns - 1e-12, mass);
  const BirkhoffIdentity b1 =
      birkhoff_identity(ex1.isotopy, disk, {0, 0}, arcs, n, 209);
  const double analytic = 3.0 * (a * 2 * phi_star);  // 3 x measure of U
  const double rel = std::abs(b1.lhs - analytic) / analytic;

  // Twist family, unit circle.
  const ExampleSystem ex5 = build_example("ex5");
  const MeasureSampler circ = circle_measure({0, 0}, 1.0, 2 * M_PI);
  const BirkhoffIdentity b2 =
      birkhoff_identity(ex5.isotopy, {{1, 0}, 0.1}, {0, 0}, circ, n, 210);

  detail = fmt("rigid diff %.3g (3sigma %.3g)", std::abs(b1.diff),
               3 * b1.stderr_est) +
           fmt(", twist diff %.3g (3sigma %.3g)", std::abs(b2.diff),
               3 * b2.stderr_est) +
           fmt(", analytic rel err %.3g", rel);
  return std::abs(b1.diff) < 3 * b1.stderr_est + 1e-12 &&
         std::abs(b2.diff) < 3 * b2.stderr_est + 1e-12 && rel < 1e-3;
}

bool c10_equivariance(std::string& detail) {
  const ExampleSystem sys = build_example("ex1");
  const SymmetryCheck rot = equivariance_check(
      sys.isotopy, plane_rotation(0.3), {2, 0}, {0, 0}, 16);
  const SymmetryCheck refl = equivariance_check(
      sys.isotopy, plane_reflection_x(), {2, 0}, {0, 0}, 16);
  detail = fmt("rotation diff %.3g, reflection diff %.3g", rot.diff,
               refl.diff);
  return rot.diff < 1e-6 && refl.diff < 1e-6;
}

bool c11_fixed_point_certificates(std::string& detail) {
  const ExampleSystem drift = build_example("drift");
  const FreeDisk disk = verify_free(drift.isotopy.map, {{0, 6.056}, 3.0});
  const auto cert = check_franks(drift.isotopy, disk, {0, 0}, 0);
  if (!cert) {
    detail = "no certificate on the drift band";
    return false;
  }
  const bool signs = cert->forward.p >= 0 && cert->backward.p <= 0;
  const bool confirmed = revalidate(drift.isotopy, *cert);

  const ExampleSystem ex1 = build_example("ex1");
  const FreeDisk rigid = verify_free(ex1.isotopy.map, {{1.5, 0}, 0.1});
  bool none = true;
  FranksOptions opts;
  opts.q_max = 50;
  for (long k = 0; k <= 3; ++k)
    if (check_franks(ex1.isotopy, rigid, {0, 0}, k, opts)) none = false;

  detail = fmt("drift p %g, p' %g", static_cast<double>(cert->forward.p),
               static_cast<double>(cert->backward.p)) +
           (confirmed ? ", revalidated" : ", revalidation FAILED") +
           (none ? ", rigid control clean" : ", rigid control found one");
  return signs && confirmed && none;
}

bool c12_randomized_properties(std::string& detail) {
  // Winding additivity over a shared endpoint.
  Rng rng(212);
  double worst_add = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Polyline a, b;
    a.vertices.push_back({rng.uniform(1, 2), rng.uniform(1, 2)});
    for (int i = 0; i < 6; ++i) {
      const Point prev = a.vertices.back();
      a.vertices.push_back(
          {prev.x + rng.uniform(-0.2, 0.2), prev.y + rng.uniform(-0.2, 0.2)});
    }
    b.vertices.push_back(a.vertices.back());
    for (int i = 0; i < 6; ++i) {
      const Point prev = b.vertices.back();
      b.vertices.push_back(
          {prev.x + rng.uniform(-0.2, 0.2), prev.y + rng.uniform(-0.2, 0.2)});
    }
    Polyline joined = a;
    joined.vertices.insert(joined.vertices.end(), b.vertices.begin() + 1,
                           b.vertices.end());
    for (Polyline* p : {&a, &b, &joined}) {
      p->params.clear();
      for (std::size_t i = 0; i < p->vertices.size(); ++i)
        p->params.push_back(static_cast<double>(i) /
                            static_cast<double>(p->vertices.size() - 1));
    }
    try {
      const double w = winding(joined, {0, 0}).turns -
                       winding(a, {0, 0}).turns - winding(b, {0, 0}).turns;
      worst_add = std::max(worst_add, std::abs(w));
    } catch (const RotorError&) {
      --t;  // segment cap or center hit: resample
    }
  }

  // Integrality of closed polygon windings.
  Rng rng2(213);
  double worst_int = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Polyline loop;
    const int m = 3 + static_cast<int>(rng2.uniform_int(0, 7));
    for (int i = 0; i < m; ++i)
      loop.vertices.push_back({rng2.uniform(-2, 2), rng2.uniform(-2, 2)});
    loop.vertices.push_back(loop.vertices.front());
    loop.params.clear();
    for (std::size_t i = 0; i < loop.vertices.size(); ++i)
      loop.params.push_back(static_cast<double>(i) /
                            static_cast<double>(loop.vertices.size() - 1));
    try {
      const double w = winding(loop, {0, 0}).turns;
      worst_int = std::max(worst_int, std::abs(w - std::round(w)));
    } catch (const RotorError&) {
      --t;
    }
  }

  // Symmetry of the linking number.
  const ExampleSystem ex2 = build_example("ex2");
  Rng rng3(214);
  double worst_sym = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Point z{rng3.uniform(-2, 2), rng3.uniform(-2, 2)};
    const Point z2{rng3.uniform(-2, 2), rng3.uniform(-2, 2)};
    if (dist(z, z2) < 0.05) {
      --t;
      continue;
    }
    worst_sym = std::max(worst_sym, std::abs(enlace(ex2.isotopy, z, z2) -
                                             enlace(ex2.isotopy, z2, z)));
  }

  // Bitwise determinism of the Monte Carlo integrator.
  const MeasureSampler m = circle_measure({0, 0}, 1.0, 1.0);
  bool deterministic = true;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto phi = [s](Point p) {
      return std::sin(p.x + static_cast<double>(s % 7)) * p.y;
    };
    const Integral i1 = integrate(m, phi, 100, s);
    const Integral i2 = integrate(m, phi, 100, s);
    if (i1.value != i2.value || i1.stderr_est != i2.stderr_est)
      deterministic = false;
  }

  detail = fmt("additivity %.3g, integrality %.3g", worst_add, worst_int) +
           fmt(", symmetry %.3g", worst_sym) +
           (deterministic ? ", integrator bitwise stable" : ", NONDETERMINISTIC");
  return worst_add < 1e-9 && worst_int < 1e-9 && worst_sym < 1e-9 &&
         deterministic;
}

}  // namespace

int main() {
  criterion(1, "rigid rotation linking and turning numbers", c1_rigid_invariants);
  criterion(2, "oscillating circle family invariants", c2_oscillating_family);
  criterion(3, "integer ball linking, far turning, boundedness scans",
            c3_integer_balls);
  criterion(4, "plateau family pair classes, supremum, translation",
            c4_plateau_family);
  criterion(5, "rotation numbers on the invariant circles", c5_rotation_numbers);
  criterion(6, "class shift adds its integer to both invariants",
            c6_class_shift_laws);
  criterion(7, "return windings are integers matching their loops",
            c7_alpha_integrality);
  criterion(8, "return speed spread stays within the admissible bound",
            c8_return_speed_range);
  criterion(9, "rotation integrals equal return-winding integrals",
            c9_measure_identity);
  criterion(10, "rotation numbers transform under plane symmetries",
            c10_equivariance);
  criterion(11, "fixed-point certificates found and revalidated",
            c11_fixed_point_certificates);
  criterion(12, "randomized winding, symmetry, determinism properties",
            c12_randomized_properties);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
