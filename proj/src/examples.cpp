#include "rotor/examples.hpp"

#include <cmath>

#include "rotor/returns.hpp"
#include "rotor/rotation.hpp"

namespace rotor {

namespace {
constexpr double kEps = 1.0 / 32.0;   // profile transition width
constexpr double kRim = 0.25;         // ball radius
constexpr double kInnerEdge = kRim - kEps;  // 7/32
}  // namespace

double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double bump_plateau(double r) {
  const double h = mollifier(r - kEps) * mollifier(kInnerEdge - r);
  if (h == 0.0) return 0.0;
  const double peak =
      mollifier(0.125 - kEps) * mollifier(kInnerEdge - 0.125);
  return h / peak;
}

double ramp_down(double r) {
  const double up = mollifier(kInnerEdge - r);
  const double down = mollifier(r - kEps);
  if (up == 0.0) return 0.0;
  return up / (up + down);
}

namespace {

Point dir(double turns) { return rotate(Point{1.0, 0.0}, turns); }

std::string fmt_pt(Point p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6g,%.6g)", p.x, p.y);
  return buf;
}

// Monotone scalar solve by bisection: find r in [lo, hi] with g(r) = target.
double solve_monotone(const std::function<double(double)>& g, double target,
                      double lo, double hi) {
  double glo = g(lo) - target, ghi = g(hi) - target;
  if (glo > 0.0 || ghi < 0.0)
    fail(Err::InvalidParams, "monotone solve bracket does not contain target");
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) - target <= 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// ex1 / ex2: global circle rotations

Isotopy make_rotation_family(std::function<double(double)> turns_of_r) {
  auto eval = [turns_of_r](double t, Point z) {
    const double r = norm(z);
    if (r == 0.0) return z;
    return rotate(z, t * turns_of_r(r));
  };
  auto inverse = [turns_of_r](Point w) {
    const double r = norm(w);
    if (r == 0.0) return w;
    return rotate(w, -turns_of_r(r));
  };
  return make_isotopy(eval, inverse);
}

// ---------------------------------------------------------------------------
// ex3 / ex4 / ex6: unit-spaced balls B_n centered on (n, 0)

Point ball_center(Point z) { return {std::round(z.x), 0.0}; }

// Per-ball polar map: angle advance a(n, r) turns, radial target rho(r)
// (interpolated linearly in t).  Identity outside every ball.
Isotopy make_ball_family(std::function<double(double, double)> advance,
                         std::function<double(double)> radial) {
  auto eval = [advance, radial](double t, Point z) {
    const Point c = ball_center(z);
    const Point u = z - c;
    const double r = norm(u);
    if (r >= kRim || r == 0.0) return z;
    const double n = c.x;
    const double rt = (1.0 - t) * r + t * radial(r);
    return c + (rt / r) * rotate(u, t * advance(n, r));
  };
  auto inverse = [advance, radial](Point w) {
    const Point c = ball_center(w);
    const Point u = w - c;
    const double rw = norm(u);
    if (rw >= kRim || rw == 0.0) return w;
    const double r = solve_monotone(radial, rw, 0.0, kRim);
    return c + (r / rw) * rotate(u, -advance(c.x, r));
  };
  return make_isotopy(eval, inverse);
}

// ---------------------------------------------------------------------------
// ex5 / ex5bis: global twists around the origin

Isotopy make_polar_family(std::function<double(double)> advance,
                          std::function<double(double)> radial,
                          double inv_lo, double inv_hi) {
  auto eval = [advance, radial](double t, Point z) {
    const double r = norm(z);
    if (r == 0.0) return z;
    const double rt = (1.0 - t) * r + t * radial(r);
    return (rt / r) * rotate(z, t * advance(r));
  };
  auto inverse = [advance, radial, inv_lo, inv_hi](Point w) {
    const double rw = norm(w);
    if (rw == 0.0) return w;
    const double lo = std::max(inv_lo, rw - inv_hi);
    const double r = solve_monotone(radial, rw, lo, rw + inv_hi);
    return (r / rw) * rotate(w, -advance(r));
  };
  return make_isotopy(eval, inverse);
}

// ---------------------------------------------------------------------------
// drift: strip Hamiltonian flow conjugated to the punctured plane

struct StripField {
  double v0, c, ys;
  Point operator()(Point s) const {
    return {-v0 * std::tanh(s.y / ys), c * std::sin(2.0 * M_PI * s.x)};
  }
};

Point rk4_flow(const StripField& F, Point s, double T) {
  if (T == 0.0) return s;
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(T) / 0.05)));
  const double h = T / n;
  for (int i = 0; i < n; ++i) {
    const Point k1 = F(s);
    const Point k2 = F(s + (0.5 * h) * k1);
    const Point k3 = F(s + (0.5 * h) * k2);
    const Point k4 = F(s + h * k3);
    s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return s;
}

Point strip_to_plane(Point s) {
  return std::exp(2.0 * M_PI * s.y) * dir(s.x);
}

Point plane_to_strip(Point z) {
  return {principal_angle(z), std::log(norm(z)) / (2.0 * M_PI)};
}

Isotopy make_drift(double v0, double c, double ys) {
  const StripField F{v0, c, ys};
  auto eval = [F](double t, Point z) {
    if (norm(z) == 0.0) return z;
    return strip_to_plane(rk4_flow(F, plane_to_strip(z), t));
  };
  auto inverse = [F](Point w) {
    if (norm(w) == 0.0) return w;
    return strip_to_plane(rk4_flow(F, plane_to_strip(w), -1.0));
  };
  return make_isotopy(eval, inverse);
}

// ---------------------------------------------------------------------------
// twist: exact-symplectic kicked twist from the generating function
//   S(theta, r') = theta r' + t Omega(r') + t (kappa/2pi) Env(r') cos(2pi theta)
// giving  r  = r' - t kappa Env(r') sin(2pi theta)
//         theta' = theta + t omega(r') + t (kappa/2pi) Env'(r') cos(2pi theta)

double twist_omega(double r) { return 1.0 + 0.5 * std::tanh((r - 2.0) / 0.4); }

double twist_env(double r) { return bump_plateau((r - 1.5) / 4.0); }

double twist_env_deriv(double r) {
  const double x = (r - 1.5) / 4.0;
  if (x <= kEps || x >= kInnerEdge) return 0.0;
  const double b = bump_plateau(x);
  const double lo = x - kEps, hi = kInnerEdge - x;
  return b * (1.0 / (lo * lo) - 1.0 / (hi * hi)) / 4.0;
}

Isotopy make_twist(double kappa) {
  auto eval = [kappa](double t, Point z) {
    const double r = norm(z);
    if (r == 0.0) return z;
    const double theta = principal_angle(z);
    const double s = std::sin(2.0 * M_PI * theta);
    const double co = std::cos(2.0 * M_PI * theta);
    // r' - t kappa Env(r') s = r, monotone in r' (kappa |Env'| < 1).
    const double rp = solve_monotone(
        [&](double x) { return x - t * kappa * twist_env(x) * s; }, r,
        std::max(0.0, r - kappa), r + kappa);
    const double tp = theta + t * twist_omega(rp) +
                      t * (kappa / (2.0 * M_PI)) * twist_env_deriv(rp) * co;
    return rp * dir(tp);
  };
  auto inverse = [kappa](Point w) {
    const double rp = norm(w);
    if (rp == 0.0) return w;
    const double thp = principal_angle(w);
    // theta = thp - omega(rp) - (kappa/2pi) Env'(rp) cos(2pi theta):
    // contraction in theta since kappa |Env'| < 1.
    double theta = thp - twist_omega(rp);
    for (int i = 0; i < 200; ++i) {
      const double next = thp - twist_omega(rp) -
                          (kappa / (2.0 * M_PI)) * twist_env_deriv(rp) *
                              std::cos(2.0 * M_PI * theta);
      if (std::abs(next - theta) < 1e-16) { theta = next; break; }
      theta = next;
    }
    const double r = rp - kappa * twist_env(rp) * std::sin(2.0 * M_PI * theta);
    return r * dir(theta);
  };
  return make_isotopy(eval, inverse);
}

// ---------------------------------------------------------------------------
// fixed-set samplers

using ShellDraw = std::function<std::optional<Point>(Rng&, double, double)>;
using BallCover = std::function<std::vector<Point>(Rng&, double, int)>;

// Concentric fixed circles at radii spacing * k (k >= 1) plus the origin.
FixedSampler circle_family_sampler(double spacing) {
  FixedSampler fs;
  fs.draw_shell = [spacing](Rng& rng, double lo,
                            double hi) -> std::optional<Point> {
    const long long k_lo = std::max(
        1LL, static_cast<long long>(std::ceil(lo / spacing - 1e-12)));
    const long long k_hi =
        static_cast<long long>(std::floor(hi / spacing + 1e-12));
    const long long circles = (k_hi >= k_lo) ? (k_hi - k_lo + 1) : 0;
    const long long origin = (lo <= 0.0) ? 1 : 0;
    if (circles + origin == 0) return std::nullopt;
    const long long pick = rng.uniform_int(0, circles + origin - 1);
    if (pick < origin) return Point{0.0, 0.0};
    const double r = spacing * static_cast<double>(k_lo + pick - origin);
    return rotate(Point{r, 0.0}, rng.uniform01());
  };
  fs.cover_ball = [spacing](Rng& rng, double R, int budget) {
    std::vector<Point> out;
    out.push_back({0.0, 0.0});
    const long long k_max =
        static_cast<long long>(std::floor(R / spacing + 1e-12));
    for (long long k = 1; k <= k_max && static_cast<int>(out.size()) < budget;
         ++k)
      out.push_back(
          rotate(Point{spacing * static_cast<double>(k), 0.0}, rng.uniform01()));
    return out;
  };
  return fs;
}

// Fixed points of the ball families: ball centers, a per-ball extra radius
// (circle of exactly fixed points, or 0 for none), optional near-center
// probes of radius probe_r, and the complement of the balls.
FixedSampler ball_family_sampler(double extra_radius, double probe_r) {
  auto outside_point = [](Rng& rng, double lo, double hi) -> std::optional<Point> {
    for (int tries = 0; tries < 128; ++tries) {
      const double r = std::sqrt(rng.uniform(lo * lo, hi * hi));
      const Point p = rotate(Point{r, 0.0}, rng.uniform01());
      if (dist(p, ball_center(p)) > kRim + 0.01) return p;
    }
    return std::nullopt;
  };
  FixedSampler fs;
  fs.draw_shell = [extra_radius, probe_r, outside_point](
                      Rng& rng, double lo, double hi) -> std::optional<Point> {
    for (int tries = 0; tries < 64; ++tries) {
      const int kind = static_cast<int>(rng.uniform_int(0, 3));
      if (kind == 0) {  // a ball center
        const long n_hi = static_cast<long>(std::floor(hi));
        std::vector<double> ns;
        for (long n = -n_hi; n <= n_hi; ++n)
          if (std::abs(static_cast<double>(n)) >= lo &&
              std::abs(static_cast<double>(n)) <= hi)
            ns.push_back(static_cast<double>(n));
        if (!ns.empty())
          return Point{ns[static_cast<std::size_t>(rng.uniform_int(
                           0, static_cast<long long>(ns.size()) - 1))],
                       0.0};
      } else if (kind == 1 && extra_radius > 0.0) {  // per-ball fixed circle
        const long n_hi = static_cast<long>(std::floor(hi + 0.5));
        const long n = static_cast<long>(rng.uniform_int(-n_hi, n_hi));
        const Point p = Point{static_cast<double>(n), 0.0} +
                        rotate(Point{extra_radius, 0.0}, rng.uniform01());
        if (norm(p) >= lo && norm(p) <= hi) return p;
      } else if (kind == 2 && probe_r > 0.0) {  // near-center probe
        const long n_hi = static_cast<long>(std::floor(hi));
        const long n = static_cast<long>(rng.uniform_int(-n_hi, n_hi));
        const Point p = Point{static_cast<double>(n), 0.0} +
                        rotate(Point{probe_r, 0.0}, rng.uniform01());
        if (norm(p) >= lo && norm(p) <= hi) return p;
      } else {
        const auto p = outside_point(rng, lo, hi);
        if (p) return p;
      }
    }
    return std::nullopt;
  };
  fs.cover_ball = [extra_radius, probe_r, outside_point](Rng& rng, double R,
                                                         int budget) {
    std::vector<Point> out;
    auto push = [&out, R, budget](const Point& p) {
      if (norm(p) <= R && static_cast<int>(out.size()) < budget)
        out.push_back(p);
    };
    // Satellite of the ball at c at the given radius; when the random
    // angle leaves the cover radius, fall back to the inward direction so
    // the outermost balls always contribute their extremal pairs.
    auto satellite = [&rng, R](Point c, double r) {
      Point p = c + rotate(Point{r, 0.0}, rng.uniform01());
      if (norm(p) > R && norm(c) > 0.0) {
        const double s = r / norm(c);
        p = Point{c.x * (1.0 - s), c.y * (1.0 - s)};
      }
      return p;
    };
    // Outermost balls first: budget truncation must not drop them.
    const long n_max = static_cast<long>(std::floor(R));
    std::vector<long> order;
    for (long a = n_max; a > 0; --a) {
      order.push_back(-a);
      order.push_back(a);
    }
    order.push_back(0);
    for (long n : order) {
      if (static_cast<int>(out.size()) + 4 > budget) break;
      const Point c{static_cast<double>(n), 0.0};
      push(c);
      if (extra_radius > 0.0) push(satellite(c, extra_radius));
      if (probe_r > 0.0) push(satellite(c, probe_r));
      const auto p = outside_point(rng, std::max(0.31, R - 1.0), R * 0.999);
      if (p) push(*p);
    }
    return out;
  };
  return fs;
}

FixedSampler listed_points_sampler(std::vector<Point> pts) {
  FixedSampler fs;
  fs.draw_shell = [pts](Rng& rng, double lo, double hi) -> std::optional<Point> {
    std::vector<Point> in;
    for (const Point& p : pts)
      if (norm(p) >= lo && norm(p) <= hi) in.push_back(p);
    if (in.empty()) return std::nullopt;
    return in[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<long long>(in.size()) - 1))];
  };
  fs.cover_ball = [pts](Rng&, double R, int budget) {
    std::vector<Point> out;
    for (const Point& p : pts)
      if (norm(p) <= R && static_cast<int>(out.size()) < budget)
        out.push_back(p);
    return out;
  };
  return fs;
}

// ---------------------------------------------------------------------------
// oracle tables

void add_case(std::vector<OracleCase>& v, std::string id, std::string quantity,
              std::string args, double expected, double tol,
              std::function<double()> compute) {
  v.push_back({std::move(id), std::move(quantity), std::move(args), expected,
               tol, std::move(compute)});
}

std::vector<OracleCase> oracles_ex1(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int n = 1; n <= 5; ++n) {
    const Point z{static_cast<double>(n), 0.0};
    add_case(v, "ex1_enlace_n" + std::to_string(n), "enlace",
             "z=" + fmt_pt(z) + ";z2=(0,0)", n, 1e-9,
             [iso, z]() { return enlace(iso, z, Point{0, 0}); });
    add_case(v, "ex1_tourne_n" + std::to_string(n), "tourne",
             "z=" + fmt_pt(z), n, 1e-9, [iso, z]() { return tourne(iso, z); });
  }
  add_case(v, "ex1_alpha_r15", "alpha", "disk=(1.5,0,0.1);z=on-circle;z2=(0,0)",
           3.0, 1e-9, [iso]() {
             FreeDisk d{{1.5, 0.0}, 0.1};
             const Point z = rotate(Point{1.5, 0.0}, 0.01);
             return static_cast<double>(
                 alpha(iso, d, Point{0, 0}, z));
           });
  return v;
}

std::vector<OracleCase> oracles_ex2(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int n = 1; n <= 6; ++n) {
    const Point z = rotate(Point{static_cast<double>(n), 0.0}, 0.15);
    add_case(v, "ex2_tourne_n" + std::to_string(n), "tourne", "z=" + fmt_pt(z),
             (n % 2 == 0) ? 1.0 : -1.0, 1e-9,
             [iso, z]() { return tourne(iso, z); });
  }
  // Linking of fixed pairs matches cos(pi max(|z|,|z2|)).
  const struct { double r, a, r2, a2; } pairs[] = {
      {1.0, 0.15, 0.5, 0.62}, {1.5, 0.33, 1.0, 0.05}, {2.0, 0.78, 0.5, 0.41}};
  int k = 1;
  for (const auto& pr : pairs) {
    const Point z = rotate(Point{pr.r, 0.0}, pr.a);
    const Point z2 = rotate(Point{pr.r2, 0.0}, pr.a2);
    const double expect = std::cos(M_PI * std::max(pr.r, pr.r2));
    add_case(v, "ex2_enlace_p" + std::to_string(k++), "enlace",
             "z=" + fmt_pt(z) + ";z2=" + fmt_pt(z2), expect, 1e-9,
             [iso, z, z2]() { return enlace(iso, z, z2); });
  }
  return v;
}

std::vector<OracleCase> oracles_ex3(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int n = -3; n <= 3; ++n) {
    const Point c{static_cast<double>(n), 0.0};
    const Point z2 = c + Point{0.125, 0.0};
    add_case(v, "ex3_enlace_k" + std::to_string(n + 3), "enlace",
             "z=" + fmt_pt(c) + ";z2=" + fmt_pt(z2), n, 1e-9,
             [iso, c, z2]() { return enlace(iso, c, z2); });
  }
  const Point far[] = {Point{1.0, 0.0} + rotate(Point{0.125, 0.0}, 0.3),
                       {0.6, 0.7},
                       {-2.0, 0.0}};
  int k = 0;
  for (const Point& z : far)
    add_case(v, "ex3_tourne_t" + std::to_string(k++), "tourne",
             "z=" + fmt_pt(z), 0.0, 1e-9,
             [iso, z]() { return tourne(iso, z); });
  return v;
}

std::vector<OracleCase> oracles_ex4(const Isotopy& iso, double theta0) {
  std::vector<OracleCase> v;
  // Same ball, both radii in the inner plateau: linking is theta0 itself.
  // (Radii well above the coordinate rounding scale of the ball center,
  // where the winding is computable to full precision.)
  {
    const Point z = Point{1.0, 0.0} + rotate(Point{0.01, 0.0}, 0.12);
    const Point z2 = Point{1.0, 0.0} + rotate(Point{0.002, 0.0}, 0.77);
    add_case(v, "ex4_enlace_plateau", "enlace",
             "z=" + fmt_pt(z) + ";z2=" + fmt_pt(z2), theta0, 1e-9,
             [iso, z, z2]() { return enlace(iso, z, z2); });
  }
  // Same ball, equal radii: both points turn by the same profile angle.
  {
    const double r = 0.1;
    const Point z = Point{-1.0, 0.0} + rotate(Point{r, 0.0}, 0.2);
    const Point z2 = Point{-1.0, 0.0} + rotate(Point{r, 0.0}, 0.7);
    add_case(v, "ex4_enlace_ring", "enlace",
             "z=" + fmt_pt(z) + ";z2=" + fmt_pt(z2), theta0 * ramp_down(r),
             1e-9, [iso, z, z2]() { return enlace(iso, z, z2); });
  }
  // Fixed pair across balls: the loop closes without enclosing the origin.
  {
    const Point z = Point{0.0, 0.0} + rotate(Point{0.23, 0.0}, 0.4);
    const Point z2{1.0, 0.0};
    add_case(v, "ex4_enlace_cross", "enlace",
             "z=" + fmt_pt(z) + ";z2=" + fmt_pt(z2), 0.0, 1e-9,
             [iso, z, z2]() { return enlace(iso, z, z2); });
  }
  add_case(v, "ex4_translation_commute", "commute", "grid=5x5", 0.0, 1e-12,
           [iso]() {
             double worst = 0.0;
             for (int i = 0; i < 5; ++i)
               for (int j = 0; j < 5; ++j) {
                 const Point z{-1.2 + 0.6 * i, -0.2 + 0.1 * j};
                 const Point a = iso.map(z + Point{1.0, 0.0});
                 const Point b = iso.map(z) + Point{1.0, 0.0};
                 worst = std::max(worst, dist(a, b));
               }
             return worst;
           });
  return v;
}

std::vector<OracleCase> oracles_ex5(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int m = 1; m <= 4; ++m) {
    const Point z = rotate(Point{static_cast<double>(m), 0.0}, 0.1);
    add_case(v, "ex5_rho_m" + std::to_string(m), "rho",
             "z=" + fmt_pt(z) + ";z2=(0,0)", m + 0.5, 1e-9, [iso, z]() {
               return rho_birkhoff(iso, z, Point{0, 0}).value;
             });
  }
  add_case(v, "ex5_alpha_m1", "alpha", "disk=(1,0,0.1);z=on-circle;z2=(0,0)",
           3.0, 1e-9, [iso]() {
             FreeDisk d{{1.0, 0.0}, 0.1};
             const Point z = rotate(Point{1.0, 0.0}, 0.005);
             return static_cast<double>(alpha(iso, d, Point{0, 0}, z));
           });
  return v;
}

std::vector<OracleCase> oracles_ex5bis(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int n = 1; n <= 4; ++n) {
    const Point z = rotate(Point{1.0 / n, 0.0}, 0.37);
    add_case(v, "ex5bis_rho_n" + std::to_string(n), "rho",
             "z=" + fmt_pt(z) + ";z2=(0,0)", n + 0.5, 1e-9, [iso, z]() {
               return rho_birkhoff(iso, z, Point{0, 0}).value;
             });
  }
  return v;
}

std::vector<OracleCase> oracles_ex6(const Isotopy& iso) {
  std::vector<OracleCase> v;
  for (int n = 1; n <= 4; ++n) {
    const Point c{static_cast<double>(n), 0.0};
    const Point z = c + rotate(Point{0.125, 0.0}, 0.21);
    add_case(v, "ex6_rho_n" + std::to_string(n), "rho",
             "z=" + fmt_pt(z) + ";z2=" + fmt_pt(c), n + 0.5, 1e-9,
             [iso, z, c]() { return rho_birkhoff(iso, z, c).value; });
  }
  add_case(v, "ex6_enlace_fixedpair", "enlace", "z=(1,0);z2=(2,0)", 0.0, 1e-9,
           [iso]() { return enlace(iso, Point{1, 0}, Point{2, 0}); });
  return v;
}

}  // namespace

ExampleSystem build_example(ExampleId id, const ExampleParams& params) {
  ExampleSystem sys;
  sys.id = id;
  sys.params = params;

  switch (id) {
    case ExampleId::Ex1: {
      sys.name = "ex1";
      sys.isotopy = make_rotation_family([](double r) { return r; });
      sys.fixed = circle_family_sampler(1.0);
      sys.measures = {circle_measure({0, 0}, 1.0, 1.0),
                      circle_measure({0, 0}, 1.5, 1.0)};
      sys.oracles = oracles_ex1(sys.isotopy);
      break;
    }
    case ExampleId::Ex2: {
      sys.name = "ex2";
      sys.isotopy =
          make_rotation_family([](double r) { return std::cos(M_PI * r); });
      sys.fixed = circle_family_sampler(0.5);
      sys.measures = {circle_measure({0, 0}, 0.5, 1.0),
                      circle_measure({0, 0}, 1.0, 1.0)};
      sys.oracles = oracles_ex2(sys.isotopy);
      break;
    }
    case ExampleId::Ex3: {
      sys.name = "ex3";
      sys.isotopy = make_ball_family(
          [](double n, double r) { return n * bump_plateau(r); },
          [](double r) { return r; });
      sys.fixed = ball_family_sampler(0.125, 0.0);
      sys.measures = {ball_measure({1, 0}, kRim, M_PI * kRim * kRim)};
      sys.oracles = oracles_ex3(sys.isotopy);
      break;
    }
    case ExampleId::Ex4: {
      const double th = params.theta0;
      if (!(std::abs(th) <= 3.0) || th == 0.0)
        fail(Err::InvalidParams, "ex4 needs theta0 nonzero with |theta0| <= 3");
      sys.name = "ex4";
      sys.isotopy = make_ball_family(
          [th](double, double r) { return th * ramp_down(r); },
          [](double r) { return r; });
      sys.fixed = ball_family_sampler(0.23, 1e-10);
      sys.measures = {ball_measure({0, 0}, kRim, M_PI * kRim * kRim)};
      sys.oracles = oracles_ex4(sys.isotopy, th);
      break;
    }
    case ExampleId::Ex5: {
      const double c5 = params.c5;
      if (!(c5 > 0.0) || !(c5 < 1.0 / M_PI))
        fail(Err::InvalidParams, "ex5 needs c5 in (0, 1/pi)");
      sys.name = "ex5";
      auto radial = [c5](double r) {
        const double s = std::sin(M_PI * r);
        return r + c5 * s * s;
      };
      sys.isotopy = make_polar_family([](double r) { return r + 0.5; }, radial,
                                      0.0, 2.0 * c5);
      sys.fixed = listed_points_sampler({{0.0, 0.0}});
      sys.measures = {dyadic_circles_measure({0, 0})};
      sys.oracles = oracles_ex5(sys.isotopy);
      break;
    }
    case ExampleId::Ex5bis: {
      const double c5 = params.c5;
      if (!(c5 > 0.0) || !(c5 < 1.0 / M_PI))
        fail(Err::InvalidParams, "ex5bis needs c5 in (0, 1/pi)");
      sys.name = "ex5bis";
      auto radial = [c5](double r) {
        if (r <= 0.0) return 0.0;
        if (r >= 1.0) return r + c5 * std::tanh(r - 1.0);
        const double s = 1.0 / r;
        const double ss = std::sin(M_PI * s);
        return 1.0 / (s + c5 * ss * ss);
      };
      sys.isotopy = make_polar_family(
          [](double r) { return 1.0 / r + 0.5; }, radial, 0.0, 2.0 * c5);
      sys.fixed = listed_points_sampler({{0.0, 0.0}});
      // Weighted circles of radius 1/n, weight 2^-n.
      {
        MeasureSampler m;
        m.total_mass = 1.0;
        m.description = "sum over n>=1 of 2^-n uniform circles of radius 1/n";
        m.sample = [](Rng& rng) -> WeightedPoint {
          double u = rng.uniform01();
          while (u <= 0.0) u = rng.uniform01();
          const int n = 1 + static_cast<int>(std::floor(-std::log2(u)));
          return {rotate(Point{1.0 / n, 0.0}, rng.uniform01()), 1.0};
        };
        sys.measures = {m};
      }
      sys.oracles = oracles_ex5bis(sys.isotopy);
      break;
    }
    case ExampleId::Ex6: {
      const double c6 = params.c6;
      if (!(c6 > 0.0) || !(c6 <= 60.0))
        fail(Err::InvalidParams, "ex6 needs c6 in (0, 60]");
      sys.name = "ex6";
      sys.isotopy = make_ball_family(
          [](double n, double r) { return (n + 0.5) * bump_plateau(r); },
          [c6](double r) { return r + c6 * r * (0.125 - r) * (kRim - r); });
      sys.fixed = ball_family_sampler(0.0, 0.0);
      sys.measures = {circle_measure({1, 0}, 0.125, 1.0)};
      sys.oracles = oracles_ex6(sys.isotopy);
      break;
    }
    case ExampleId::Drift: {
      if (!(params.v0 > 0.0) || !(params.c > 0.0) || !(params.ys > 0.0))
        fail(Err::InvalidParams, "drift needs positive v0, c, ys");
      sys.name = "drift";
      sys.isotopy = make_drift(params.v0, params.c, params.ys);
      sys.fixed = listed_points_sampler({{0, 0}, {1, 0}, {-1, 0}});
      break;
    }
    case ExampleId::Twist: {
      const double kappa = params.kappa;
      // Monotonicity of the radial solve needs kappa sup|Env'| < 1.
      double env_max = 0.0;
      for (double r = 1.5; r <= 2.5; r += 1e-4)
        env_max = std::max(env_max, std::abs(twist_env_deriv(r)));
      if (!(kappa > 0.0) || kappa * env_max >= 0.95)
        fail(Err::InvalidParams, "twist kick too strong for a homeomorphism");
      sys.name = "twist";
      sys.isotopy = make_twist(kappa);
      sys.fixed = listed_points_sampler({{0, 0}, {2, 0}, {-2, 0}});
      break;
    }
  }
  return sys;
}

ExampleSystem build_example(const std::string& name,
                            const ExampleParams& params) {
  if (name == "ex1") return build_example(ExampleId::Ex1, params);
  if (name == "ex2") return build_example(ExampleId::Ex2, params);
  if (name == "ex3") return build_example(ExampleId::Ex3, params);
  if (name == "ex4") return build_example(ExampleId::Ex4, params);
  if (name == "ex5") return build_example(ExampleId::Ex5, params);
  if (name == "ex5bis") return build_example(ExampleId::Ex5bis, params);
  if (name == "ex6") return build_example(ExampleId::Ex6, params);
  if (name == "drift") return build_example(ExampleId::Drift, params);
  if (name == "twist") return build_example(ExampleId::Twist, params);
  fail(Err::InvalidParams, "unknown example '" + name + "'");
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "ex1", "ex2", "ex3", "ex4", "ex5", "ex5bis", "ex6", "drift", "twist"};
  return names;
}

}  // namespace rotor
