#include "rotor/measures.hpp"

#include <cmath>

namespace rotor {

MeasureSampler circle_measure(Point center, double radius, double mass) {
  if (!(radius > 0.0) || !(mass > 0.0))
    fail(Err::InvalidParams, "circle measure needs positive radius and mass");
  MeasureSampler m;
  m.total_mass = mass;
  m.description = "uniform circle";
  m.sample = [center, radius](Rng& rng) -> WeightedPoint {
    const double a = rng.uniform01();
    return {center + rotate(Point{radius, 0.0}, a), 1.0};
  };
  return m;
}

MeasureSampler two_arcs_measure(Point center, double radius, double a0,
                                double a1, double b0, double b1, double mass) {
  if (!(radius > 0.0) || !(mass > 0.0) || !(a1 > a0) || !(b1 > b0))
    fail(Err::InvalidParams, "two_arcs measure parameters out of range");
  const double la = a1 - a0, lb = b1 - b0;
  if (std::abs(la - lb) > 1e-12 * (la + lb))
    fail(Err::InvalidParams, "two_arcs measure requires equal arc lengths");
  MeasureSampler m;
  m.total_mass = mass;
  m.description = "uniform measure on two equal arcs";
  m.sample = [center, radius, a0, la, b0](Rng& rng) -> WeightedPoint {
    // One draw picks the arc and the position along it.
    const double u = rng.uniform01();
    const double a = (u < 0.5) ? a0 + la * (2.0 * u) : b0 + la * (2.0 * u - 1.0);
    return {center + rotate(Point{radius, 0.0}, a), 1.0};
  };
  return m;
}

MeasureSampler ball_measure(Point center, double radius, double mass) {
  if (!(radius > 0.0) || !(mass > 0.0))
    fail(Err::InvalidParams, "ball measure needs positive radius and mass");
  MeasureSampler m;
  m.total_mass = mass;
  m.description = "Lebesgue measure on a disk";
  m.sample = [center, radius](Rng& rng) -> WeightedPoint {
    const double r = radius * std::sqrt(rng.uniform01());
    const double a = rng.uniform01();
    return {center + rotate(Point{r, 0.0}, a), 1.0};
  };
  return m;
}

MeasureSampler dyadic_circles_measure(Point center) {
  MeasureSampler m;
  m.total_mass = 1.0;
  m.description = "sum over n>=1 of 2^-n uniform circles of radius n";
  m.sample = [center](Rng& rng) -> WeightedPoint {
    double u = rng.uniform01();
    while (u <= 0.0) u = rng.uniform01();
    // P(n = k) = 2^-k exactly: n is the count of leading halvings of u.
    const int n = 1 + static_cast<int>(std::floor(-std::log2(u)));
    const double a = rng.uniform01();
    return {center + rotate(Point{static_cast<double>(n), 0.0}, a), 1.0};
  };
  return m;
}

MeasureSampler point_mass_measure(Point p, double mass) {
  if (!(mass > 0.0)) fail(Err::InvalidParams, "point mass must be positive");
  MeasureSampler m;
  m.total_mass = mass;
  m.description = "point mass";
  m.sample = [p](Rng&) -> WeightedPoint { return {p, 1.0}; };
  return m;
}

Integral integrate(const MeasureSampler& m,
                   const std::function<double(Point)>& phi, long n,
                   std::uint64_t seed) {
  if (n < 100) fail(Err::InvalidParams, "integrate needs n >= 100");
  Rng rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (long i = 0; i < n; ++i) {
    const WeightedPoint s = m.sample(rng);
    const double v = s.w * phi(s.p);
    if (!std::isfinite(v)) fail(Err::NonFiniteSample, "integrand not finite");
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double var = std::max(0.0, sumsq / n - mean * mean);
  Integral out;
  out.value = m.total_mass * mean;
  out.stderr_est = m.total_mass * std::sqrt(var / n);
  return out;
}

double check_invariance(const MeasureSampler& m,
                        const std::function<Point(Point)>& f,
                        const std::vector<std::function<double(Point)>>& fns,
                        long n, std::uint64_t seed) {
  if (fns.empty()) fail(Err::EmptyInput, "no test functions");
  double worst = 0.0;
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const auto& phi = fns[k];
    // Common random numbers: same sample stream on both sides.
    const Integral a = integrate(m, phi, n, seed);
    const Integral b =
        integrate(m, [&](Point p) { return phi(f(p)); }, n, seed);
    worst = std::max(worst, std::abs(a.value - b.value));
  }
  return worst;
}

BirkhoffIdentity birkhoff_identity(const Isotopy& iso, const FreeDisk& disk,
                                   Point puncture, const MeasureSampler& m,
                                   long n, std::uint64_t seed, long max_iter) {
  if (n < 100) fail(Err::InvalidParams, "birkhoff_identity needs n >= 100");
  Rng rng(seed);
  double sum_l = 0.0, sumsq_l = 0.0;
  double sum_r = 0.0, sumsq_r = 0.0;
  for (long i = 0; i < n; ++i) {
    const WeightedPoint s = m.sample(rng);
    double vl = 0.0, vr = 0.0;
    if (disk_contains(disk, s.p))
      vr = s.w * static_cast<double>(alpha(iso, disk, puncture, s.p));
    // Forward-orbit membership test for the saturation of U; an exactly
    // periodic orbit is exhausted once it closes up.
    Point w = s.p;
    bool hits = disk_contains(disk, w);
    const double eps_per = 1e-12 * std::max(1.0, norm(s.p));
    for (long k = 1; !hits && k <= max_iter; ++k) {
      w = iso.map(w);
      hits = disk_contains(disk, w);
      if (!hits && dist(w, s.p) < eps_per) break;
    }
    if (hits) {
      const RotationEstimate est = rho_birkhoff(iso, s.p, puncture);
      vl = s.w * est.value;
    }
    sum_l += vl;
    sumsq_l += vl * vl;
    sum_r += vr;
    sumsq_r += vr * vr;
  }
  const double mean_l = sum_l / n, mean_r = sum_r / n;
  const double var_l = std::max(0.0, sumsq_l / n - mean_l * mean_l);
  const double var_r = std::max(0.0, sumsq_r / n - mean_r * mean_r);
  BirkhoffIdentity out;
  out.lhs = m.total_mass * mean_l;
  out.rhs = m.total_mass * mean_r;
  out.diff = std::abs(out.lhs - out.rhs);
  out.stderr_est = m.total_mass * std::sqrt((var_l + var_r) / n);
  return out;
}

}  // namespace rotor
