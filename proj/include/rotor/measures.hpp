#pragma once
// Invariant measures as weighted samplers, Monte Carlo integration, and the
// identity tying orbit rotation numbers to return windings:
//   integral of rho over U u f(U) u f^2(U) ... equals integral of alpha over U.

#include <string>

#include "rotor/returns.hpp"
#include "rotor/rng.hpp"
#include "rotor/rotation.hpp"

namespace rotor {

struct WeightedPoint {
  Point p;
  double w = 1.0;
};

struct MeasureSampler {
  std::function<WeightedPoint(Rng&)> sample;
  double total_mass = 0.0;
  std::string description;
};

// Measure builders.  All samples carry weight 1; total_mass scales the
// integral, so integrate(phi) estimates total_mass * E[phi].
MeasureSampler circle_measure(Point center, double radius, double mass);
MeasureSampler two_arcs_measure(Point center, double radius, double a0,
                                double a1, double b0, double b1, double mass);
MeasureSampler ball_measure(Point center, double radius, double mass);
// Sum over n >= 1 of 2^-n times the uniform circle of radius n (total 1).
MeasureSampler dyadic_circles_measure(Point center);
MeasureSampler point_mass_measure(Point p, double mass);

struct Integral {
  double value = 0.0;
  double stderr_est = 0.0;
};

// Monte Carlo integral of phi against the sampler with n >= 100 samples.
// Deterministic in (sampler, phi, n, seed); NonFiniteSample if any
// evaluation is not finite.
Integral integrate(const MeasureSampler& m,
                   const std::function<double(Point)>& phi, long n,
                   std::uint64_t seed);

// Max over test functions of |integral(phi o f) - integral(phi)| using
// common random numbers.
double check_invariance(const MeasureSampler& m,
                        const std::function<Point(Point)>& f,
                        const std::vector<std::function<double(Point)>>& fns,
                        long n, std::uint64_t seed);

struct BirkhoffIdentity {
  double lhs = 0.0;       // integral of rho over the forward-saturation of U
  double rhs = 0.0;       // integral of alpha over U
  double diff = 0.0;
  double stderr_est = 0.0;  // combined Monte Carlo error of both sides
};

// Monte Carlo check of the identity above.  A sampled point belongs to the
// saturation of U when its forward orbit enters U within max_iter steps
// (on the recurrent support of an invariant measure this matches the union
// of forward images up to a null set).  rho is estimated by rho_birkhoff;
// NoRecurrence on a sampled point aborts with that error.
BirkhoffIdentity birkhoff_identity(const Isotopy& iso, const FreeDisk& disk,
                                   Point puncture, const MeasureSampler& m,
                                   long n, std::uint64_t seed,
                                   long max_iter = 100000);

}  // namespace rotor
