#include "rotor/franks.hpp"

#include <cmath>

namespace rotor {

namespace {
constexpr double kBranchGuard = 0.25;  // max accepted distance to an integer

void require_disk_avoids(const FreeDisk& disk, Point puncture) {
  if (!(dist(puncture, disk.center) > disk.radius))
    fail(Err::InvalidParams, "puncture must lie strictly outside the disk");
}
}  // namespace

double branch_angle(const FreeDisk& disk, Point puncture, Point w) {
  require_disk_avoids(disk, puncture);
  const double base = principal_angle(disk.center - puncture);
  return base + wrap_half(principal_angle(w - puncture) - base);
}

LiftedPoint AnnulusLift::start(Point z) const {
  return make_lifted(z, puncture);
}

LiftedPoint AnnulusLift::step(const LiftedPoint& lp) const {
  return lift_step(iso, lp);
}

AnnulusLift make_annulus_lift(const Isotopy& iso, Point puncture,
                              long lift_shift) {
  const double scale = std::max(1.0, norm(puncture));
  if (dist(iso.map(puncture), puncture) > 1e-9 * scale)
    fail(Err::NotFixed, "puncture is not fixed by the end map");
  return {shift_class(iso, static_cast<int>(-lift_shift)), puncture,
          lift_shift};
}

std::vector<Point> seed_grid(const FreeDisk& disk, int n) {
  if (n < 1) fail(Err::InvalidParams, "seed grid needs n >= 1");
  std::vector<Point> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = 2.0 * (i + 0.5) / n - 1.0;
      const double v = 2.0 * (j + 0.5) / n - 1.0;
      if (u * u + v * v > 0.94) continue;
      out.push_back(disk.center + disk.radius * Point{u, v});
    }
  return out;
}

namespace {

// Lift winding of a return: integer deck index separating the returned
// branch from the starting one, plus its numerical residual.
struct BranchOffset {
  long p;
  double residual;
};

BranchOffset branch_offset(const FreeDisk& disk, Point puncture,
                           const LiftedPoint& at_start,
                           const LiftedPoint& at_return) {
  const double delta =
      (at_return.theta_lift - at_start.theta_lift) -
      (branch_angle(disk, puncture, at_return.base) -
       branch_angle(disk, puncture, at_start.base));
  const double rounded = std::round(delta);
  return {static_cast<long>(rounded), std::abs(delta - rounded)};
}

}  // namespace

std::optional<FranksCertificate> check_franks(const Isotopy& iso,
                                              const FreeDisk& disk,
                                              Point puncture, long lift_shift,
                                              const FranksOptions& opts) {
  require_disk_avoids(disk, puncture);
  if (opts.q_max < 1) fail(Err::InvalidParams, "q_max must be positive");
  const AnnulusLift lift = make_annulus_lift(iso, puncture, lift_shift);

  // Free-disk hypothesis: no sampled point may come back to the disk on the
  // branch it started from after one application of the lift.
  std::vector<Point> probe;
  for (int i = 0; i < opts.n_boundary; ++i)
    probe.push_back(disk.center + disk.radius * rotate(Point{1.0, 0.0},
                                                       double(i) /
                                                           opts.n_boundary));
  for (const Point& p : seed_grid(disk, opts.n_grid)) probe.push_back(p);
  for (const Point& w : probe) {
    LiftedPoint lp = lift.start(w);
    const LiftedPoint next = lift.step(lp);
    if (!disk_contains(disk, next.base)) continue;
    const BranchOffset off = branch_offset(disk, puncture, lp, next);
    if (off.residual >= kBranchGuard)
      fail(Err::NotFree, "lift branch offset is ambiguous on the disk");
    if (off.p == 0)
      fail(Err::NotFree, "disk meets its image under the lifted map");
  }

  std::optional<FranksWitness> forward, backward;
  for (const Point& seed : seed_grid(disk, opts.seed_grid)) {
    const LiftedPoint at_start = lift.start(seed);
    LiftedPoint lp = at_start;
    for (long q = 1; q <= opts.q_max; ++q) {
      lp = lift.step(lp);
      if (!disk_contains(disk, lp.base)) continue;
      const BranchOffset off = branch_offset(disk, puncture, at_start, lp);
      if (off.residual >= kBranchGuard) continue;
      if (!forward && off.p >= 0)
        forward = FranksWitness{seed, q, off.p, off.residual};
      if (!backward && off.p <= 0)
        backward = FranksWitness{seed, q, off.p, off.residual};
      if (forward && backward) break;
    }
    if (forward && backward) break;
  }
  if (!(forward && backward)) return std::nullopt;
  return FranksCertificate{disk, puncture, lift_shift, *forward, *backward};
}

bool revalidate(const Isotopy& iso, const FranksCertificate& cert,
                const FranksOptions&) {
  const AnnulusLift lift =
      make_annulus_lift(iso, cert.puncture, cert.lift_shift);
  for (const FranksWitness* w : {&cert.forward, &cert.backward}) {
    const LiftedPoint at_start = lift.start(w->seed);
    LiftedPoint lp = at_start;
    for (long q = 1; q <= w->q; ++q) lp = lift.step(lp);
    if (!disk_contains(cert.disk, lp.base)) return false;
    const BranchOffset off =
        branch_offset(cert.disk, cert.puncture, at_start, lp);
    if (off.residual >= kBranchGuard || off.p != w->p) return false;
  }
  return cert.forward.p >= 0 && cert.backward.p <= 0 && cert.forward.q >= 1 &&
         cert.backward.q >= 1;
}

}  // namespace rotor
