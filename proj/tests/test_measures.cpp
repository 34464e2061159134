// Measure samplers, Monte Carlo integration, and the rotation/return identity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rotor/examples.hpp"
#include "rotor/measures.hpp"

using namespace rotor;

namespace {

const std::vector<std::function<double(Point)>>& bounded_tests() {
  static const std::vector<std::function<double(Point)>> fns = {
      [](Point p) { return std::sin(3 * p.x) * std::cos(2 * p.y); },
      [](Point p) { return std::cos(p.x + 2 * p.y); },
      [](Point p) { return std::sin(p.x - p.y); },
  };
  return fns;
}

}  // namespace

TEST_CASE("integration is deterministic in the seed") {
  const MeasureSampler m = circle_measure({0, 0}, 1.0, 1.0);
  const auto phi = [](Point p) { return p.x * p.x - p.y; };
  const Integral a = integrate(m, phi, 5000, 99);
  const Integral b = integrate(m, phi, 5000, 99);
  CHECK(a.value == b.value);  // bitwise
  CHECK(a.stderr_est == b.stderr_est);
  const Integral c = integrate(m, phi, 5000, 100);
  CHECK(a.value != c.value);
}

TEST_CASE("circle moments match closed forms") {
  const MeasureSampler m = circle_measure({0, 0}, 2.0, 1.0);
  // x^2 + y^2 is constant 4 on the circle: zero-variance estimate.
  const Integral r2 = integrate(
      m, [](Point p) { return p.x * p.x + p.y * p.y; }, 1000, 3);
  CHECK(r2.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r2.stderr_est < 1e-12);
  // The mean of x vanishes by symmetry.
  const Integral mx = integrate(m, [](Point p) { return p.x; }, 200000, 4);
  CHECK(std::abs(mx.value) < 4 * mx.stderr_est + 1e-3);
}

TEST_CASE("ball integrals scale with the stated mass") {
  const MeasureSampler m = ball_measure({1, 0}, 0.25, 2.0);
  const Integral one = integrate(m, [](Point) { return 1.0; }, 1000, 5);
  CHECK(one.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(one.stderr_est < 1e-12);
}

TEST_CASE("dyadic circle weights halve radius by radius") {
  const MeasureSampler m = dyadic_circles_measure({0, 0});
  CHECK(m.total_mass == doctest::Approx(1.0));
  Rng rng(17);
  int count1 = 0, count2 = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const WeightedPoint wp = m.sample(rng);
    const double r = std::round(dist(wp.p, {0, 0}));
    if (r == 1) ++count1;
    if (r == 2) ++count2;
  }
  CHECK(std::abs(count1 / static_cast<double>(n) - 0.5) < 0.01);
  CHECK(std::abs(count2 / static_cast<double>(n) - 0.25) < 0.01);
}

TEST_CASE("two_arcs samples stay on the stated arcs") {
  const MeasureSampler m = two_arcs_measure({0, 0}, 1.5, -0.05, 0.05, 0.45,
                                            0.55, 2.0);
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    const WeightedPoint wp = m.sample(rng);
    CHECK(std::abs(dist(wp.p, {0, 0}) - 1.5) < 1e-12);
    const double a = principal_angle(wp.p);
    const bool in_first = (a <= 0.05 + 1e-12) || (a >= 0.95 - 1e-12);
    const bool in_second = (a >= 0.45 - 1e-12) && (a <= 0.55 + 1e-12);
    CHECK((in_first || in_second));
  }
}

TEST_CASE("unequal arcs are rejected") {
  CHECK_THROWS_WITH_AS(two_arcs_measure({0, 0}, 1.5, 0.0, 0.1, 0.5, 0.7, 1.0),
                       doctest::Contains("InvalidParams"), RotorError);
}

TEST_CASE("integration rejects tiny sample counts and non-finite values") {
  const MeasureSampler m = circle_measure({0, 0}, 1.0, 1.0);
  CHECK_THROWS_WITH_AS(integrate(m, [](Point) { return 1.0; }, 99, 1),
                       doctest::Contains("InvalidParams"), RotorError);
  CHECK_THROWS_WITH_AS(
      integrate(m, [](Point p) { return 1.0 / (p.y + 2.0 - p.y - 2.0); }, 100,
                1),
      doctest::Contains("NonFiniteSample"), RotorError);
}

TEST_CASE("bundled measures are invariant under their end maps") {
  for (const std::string& name : example_names()) {
    const ExampleSystem sys = build_example(name);
    for (const MeasureSampler& m : sys.measures) {
      INFO(name, " measure: ", m.description);
      const double dev =
          check_invariance(m, sys.isotopy.map, bounded_tests(), 40000, 11);
      CHECK(dev < 0.05);
    }
  }
}

TEST_CASE("invariance checking flags a genuinely moved measure") {
  const MeasureSampler m = ball_measure({0, 0}, 0.25, 1.0);
  const auto translate = [](Point p) { return Point{p.x + 1, p.y}; };
  CHECK(check_invariance(m, translate, bounded_tests(), 20000, 11) > 0.1);
}

TEST_CASE("rotation integrals equal return-winding integrals") {
  const ExampleSystem sys = build_example("ex5");
  const FreeDisk disk{{1, 0}, 0.1};

  // Full circle measure: most orbits are period two and never enter the
  // disk, so both sides equal (value on the saturation) x (its measure).
  const MeasureSampler full = circle_measure({0, 0}, 1.0, 1.0);
  const BirkhoffIdentity bi =
      birkhoff_identity(sys.isotopy, disk, {0, 0}, full, 20000, 7);
  CHECK(std::abs(bi.diff) < 3 * bi.stderr_est + 1e-9);
  // Analytically: rho = 3/2 on the saturation, which is two arcs of
  // half-width arc_frac (in turns) each.
  const double arc_frac = std::asin(disk.radius / 2) / M_PI;
  CHECK(std::abs(bi.lhs - 1.5 * 4 * arc_frac) < 0.012);

  // Measure supported exactly on the saturation (the cut arc and its image
  // half a turn away): the rho side becomes a zero-variance estimate.
  const double f = arc_frac - 1e-9;
  const MeasureSampler arcs =
      two_arcs_measure({0, 0}, 1.0, -f, f, 0.5 - f, 0.5 + f, 1.0);
  const BirkhoffIdentity bi2 =
      birkhoff_identity(sys.isotopy, disk, {0, 0}, arcs, 20000, 7);
  CHECK(bi2.lhs == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(std::abs(bi2.diff) < 3 * bi2.stderr_est + 1e-9);
}
