#include "rotor/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotor/examples.hpp"
#include "rotor/franks.hpp"
#include "rotor/measures.hpp"
#include "rotor/properties.hpp"
#include "rotor/report.hpp"
#include "rotor/returns.hpp"
#include "rotor/rotation.hpp"

namespace rotor {

namespace {

struct Shared {
  std::string example = "ex1";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

void add_shared(CLI::App* sc, Shared& sh) {
  sc->add_option("--example", sh.example, "example system name")
      ->check(CLI::IsMember(example_names()));
  sc->add_option("--tol", sh.tol, "tolerance for path refinement");
  sc->add_option("--seed", sh.seed, "random seed for sampled computations");
  sc->add_option("--out", sh.out, "write output to this file");
  sc->add_flag("--json", sh.json, "emit JSON instead of plain text");
}

Point parse_point(const std::string& s) {
  double x = 0, y = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &extra) != 2)
    fail(Err::InvalidParams, "expected a point as x,y: '" + s + "'");
  return {x, y};
}

FreeDisk parse_disk(const std::string& s) {
  double x = 0, y = 0, r = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &x, &y, &r, &extra) != 3 ||
      !(r > 0.0))
    fail(Err::InvalidParams, "expected a disk as cx,cy,r: '" + s + "'");
  return FreeDisk{{x, y}, r};
}

void emit(const Shared& sh, const std::string& text) {
  if (sh.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(sh.out, std::ios::binary);
  if (!f) fail(Err::InvalidParams, "cannot open output file '" + sh.out + "'");
  f << text;
}

std::string scalar_text(const Shared& sh, const char* quantity, double v,
                        const char* fmt) {
  if (sh.json) {
    nlohmann::json j{{"quantity", quantity}, {"value", v}};
    return j.dump(2) + "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return std::string(buf) + "\n";
}

int cmd_tourne(const Shared& sh, const std::string& point_s,
               const std::string& svg_path) {
  const ExampleSystem sys = build_example(sh.example);
  const Point z = parse_point(point_s);
  const double v = tourne(sys.isotopy, z, sh.tol);
  if (!svg_path.empty()) {
    const Trajectory tr = trajectory(sys.isotopy, z, sh.tol);
    std::ofstream f(svg_path, std::ios::binary);
    if (!f)
      fail(Err::InvalidParams, "cannot open svg file '" + svg_path + "'");
    const Point origin{0, 0};
    f << to_svg(tr.path, &origin);
  }
  emit(sh, scalar_text(sh, "tourne", v, "%.9f"));
  return 0;
}

int cmd_enlace(const Shared& sh, const std::string& point_s,
               const std::string& point2_s, const std::string& svg_path) {
  const ExampleSystem sys = build_example(sh.example);
  const Point z = parse_point(point_s), z2 = parse_point(point2_s);
  const double v = enlace(sys.isotopy, z, z2, sh.tol);
  if (!svg_path.empty()) {
    const Isotopy& iso = sys.isotopy;
    const Polyline path = refine_plain(
        [&iso, z, z2](double t) { return iso.eval(t, z) - iso.eval(t, z2); },
        std::max(sh.tol, 1e-4));
    std::ofstream f(svg_path, std::ios::binary);
    if (!f)
      fail(Err::InvalidParams, "cannot open svg file '" + svg_path + "'");
    const Point origin{0, 0};
    f << to_svg(path, &origin);
  }
  emit(sh, scalar_text(sh, "enlace", v, "%.9f"));
  return 0;
}

int cmd_rho(const Shared& sh, const std::string& point_s,
            const std::string& puncture_s, long max_iter, double eps_return) {
  const ExampleSystem sys = build_example(sh.example);
  const RotationEstimate est =
      rho_birkhoff(sys.isotopy, parse_point(point_s), parse_point(puncture_s),
                   eps_return, max_iter, sh.tol);
  if (sh.json) {
    nlohmann::json j{{"quantity", "rho"},
                     {"value", est.value},
                     {"converged", est.converged},
                     {"return_times", est.return_times},
                     {"residual", est.residual}};
    emit(sh, j.dump(2) + "\n");
  } else {
    emit(sh, format_sig12(est.value) +
                 (est.converged ? " converged" : " unconverged") + "\n");
  }
  return est.converged ? 0 : 1;
}

int cmd_alpha(const Shared& sh, const std::string& disk_s,
              const std::string& puncture_s, const std::string& point_s,
              long max_iter) {
  const ExampleSystem sys = build_example(sh.example);
  const AlphaData a =
      alpha_data(sys.isotopy, parse_disk(disk_s), parse_point(puncture_s),
                 parse_point(point_s), 1e-6, max_iter);
  if (sh.json) {
    nlohmann::json j{{"quantity", "alpha"},
                     {"value", a.value},
                     {"tau", a.tau},
                     {"residual", a.residual}};
    emit(sh, j.dump(2) + "\n");
  } else {
    emit(sh, std::to_string(a.value) + "\n");
  }
  return 0;
}

int cmd_franks(const Shared& sh, const std::string& disk_s,
               const std::string& puncture_s, long k, long q_max) {
  const ExampleSystem sys = build_example(sh.example);
  FranksOptions opts;
  opts.q_max = q_max;
  const auto cert = check_franks(sys.isotopy, parse_disk(disk_s),
                                 parse_point(puncture_s), k, opts);
  if (sh.json) {
    nlohmann::json j{{"quantity", "franks"}, {"certificate", bool(cert)}};
    if (cert) {
      j["forward"] = {{"q", cert->forward.q}, {"p", cert->forward.p}};
      j["backward"] = {{"q", cert->backward.q}, {"p", cert->backward.p}};
    }
    emit(sh, j.dump(2) + "\n");
  } else if (cert) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "certificate q=%ld p=%ld q2=%ld p2=%ld\n",
                  cert->forward.q, cert->forward.p, cert->backward.q,
                  cert->backward.p);
    emit(sh, buf);
  } else {
    emit(sh, "no-certificate\n");
  }
  return 0;
}

int cmd_props(const Shared& sh, double radius, int budget) {
  const ExampleSystem sys = build_example(sh.example);
  const double R = radius > 0.0 ? radius : sys.safe_radius;
  Rng rng(sh.seed);
  const P1Report p1 = scan_p1(sys, R, budget, rng);
  const P2Report p2 = scan_p2(sys, {R, 2 * R, 4 * R}, 2 * budget, rng);
  bool have_shift = true;
  long shift = 0;
  try {
    shift = adapted_shift(sys, 4 * R, 2 * budget, rng);
  } catch (const RotorError&) {
    have_shift = false;
  }
  if (sh.json) {
    nlohmann::json j{{"example", sys.name},
                     {"p1", verdict_name(p1.verdict)},
                     {"p1_stage_max", p1.stage_max},
                     {"p2", verdict_name(p2.verdict)},
                     {"p2_spread", p2.spread}};
    if (have_shift) j["adapted_shift"] = shift;
    emit(sh, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "p1 " << verdict_name(p1.verdict) << "\n";
    os << "p2 " << verdict_name(p2.verdict) << "\n";
    if (have_shift)
      os << "adapted_shift " << shift << "\n";
    else
      os << "adapted_shift none\n";
    emit(sh, os.str());
  }
  return 0;
}

int cmd_measures(const Shared& sh, long n) {
  const ExampleSystem sys = build_example(sh.example);
  if (sys.measures.empty()) {
    emit(sh, sh.json ? "[]\n" : "no measures\n");
    return 0;
  }
  const std::vector<std::function<double(Point)>> tests = {
      [](Point p) { return p.x; }, [](Point p) { return p.y; },
      [](Point p) { return p.x * p.x + p.y * p.y; },
      [](Point p) { return std::sin(3.0 * p.x) * std::cos(2.0 * p.y); }};
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < sys.measures.size(); ++i) {
    const MeasureSampler& m = sys.measures[i];
    const double dev =
        check_invariance(m, sys.isotopy.map, tests, n, sh.seed);
    if (sh.json) {
      arr.push_back({{"index", i},
                     {"description", m.description},
                     {"max_dev", dev}});
    } else {
      os << "measure " << i << " max_dev " << format_sig12(dev) << " ("
         << m.description << ")\n";
    }
  }
  emit(sh, sh.json ? arr.dump(2) + "\n" : os.str());
  return 0;
}

int cmd_reproduce(const Shared& sh) {
  std::vector<ReportRow> rows;
  for (const char* name :
       {"ex1", "ex2", "ex3", "ex4", "ex5", "ex5bis", "ex6"}) {
    const ExampleSystem sys = build_example(name);
    for (const OracleCase& oc : sys.oracles)
      rows.push_back(
          {oc.id, oc.quantity, oc.args, oc.expected, oc.compute(), oc.tol});
  }
  emit(sh, sh.json ? to_json(rows) : to_csv(rows));
  return all_pass(rows) ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "rotor: winding, linking and rotation invariants of plane isotopies"};
  app.require_subcommand(1);

  Shared sh;
  std::string point_s, point2_s, puncture_s, disk_s, svg_path;
  long max_iter = 1000000, k = 0, q_max = 40, n_samples = 20000;
  double eps_return = 1e-6, radius = 0.0;
  int budget = 12;

  CLI::App* tourne_sc =
      app.add_subcommand("tourne", "turning number of a point");
  add_shared(tourne_sc, sh);
  tourne_sc->add_option("--point", point_s, "point as x,y")->required();
  tourne_sc->add_option("--svg", svg_path, "write the trajectory as SVG");

  CLI::App* enlace_sc =
      app.add_subcommand("enlace", "linking number of two points");
  add_shared(enlace_sc, sh);
  enlace_sc->add_option("--point", point_s, "first point as x,y")->required();
  enlace_sc->add_option("--point2", point2_s, "second point as x,y")
      ->required();
  enlace_sc->add_option("--svg", svg_path, "write the difference path as SVG");

  CLI::App* rho_sc =
      app.add_subcommand("rho", "rotation number around a fixed point");
  add_shared(rho_sc, sh);
  rho_sc->add_option("--point", point_s, "orbit seed as x,y")->required();
  rho_sc->add_option("--puncture", puncture_s, "fixed point as x,y")
      ->required();
  rho_sc->add_option("--max-iter", max_iter, "iteration budget");
  rho_sc->add_option("--eps-return", eps_return, "return neighborhood size");

  CLI::App* alpha_sc =
      app.add_subcommand("alpha", "free-disk return winding of a point");
  add_shared(alpha_sc, sh);
  alpha_sc->add_option("--disk", disk_s, "disk as cx,cy,r")->required();
  alpha_sc->add_option("--puncture", puncture_s, "fixed point as x,y")
      ->required();
  alpha_sc->add_option("--point", point_s, "point of the disk as x,y")
      ->required();
  alpha_sc->add_option("--max-iter", max_iter, "iteration budget");

  CLI::App* franks_sc = app.add_subcommand(
      "franks", "search a fixed-point certificate for a lifted map");
  add_shared(franks_sc, sh);
  franks_sc->add_option("--disk", disk_s, "disk as cx,cy,r")->required();
  franks_sc->add_option("--puncture", puncture_s, "fixed point as x,y")
      ->required();
  franks_sc->add_option("--k", k, "deck shift of the lift");
  franks_sc->add_option("--qmax", q_max, "iteration horizon per seed");

  CLI::App* props_sc = app.add_subcommand(
      "props", "boundedness and constancy scans of the invariants");
  add_shared(props_sc, sh);
  props_sc->add_option("--radius", radius, "base scan radius");
  props_sc->add_option("--budget", budget, "sample budget per stage");

  CLI::App* measures_sc = app.add_subcommand(
      "measures", "invariance deviation of the bundled measures");
  add_shared(measures_sc, sh);
  measures_sc->add_option("--n", n_samples, "Monte Carlo sample count");

  CLI::App* repro_sc = app.add_subcommand(
      "reproduce-appendix", "recompute the bundled reference table");
  add_shared(repro_sc, sh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tourne_sc->parsed()) return cmd_tourne(sh, point_s, svg_path);
    if (enlace_sc->parsed())
      return cmd_enlace(sh, point_s, point2_s, svg_path);
    if (rho_sc->parsed())
      return cmd_rho(sh, point_s, puncture_s, max_iter, eps_return);
    if (alpha_sc->parsed())
      return cmd_alpha(sh, disk_s, puncture_s, point_s, max_iter);
    if (franks_sc->parsed())
      return cmd_franks(sh, disk_s, puncture_s, k, q_max);
    if (props_sc->parsed()) return cmd_props(sh, radius, budget);
    if (measures_sc->parsed()) return cmd_measures(sh, n_samples);
    if (repro_sc->parsed()) return cmd_reproduce(sh);
  } catch (const RotorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const Err c = e.code();
    return (c == Err::InvalidParams || c == Err::EmptyInput ||
            c == Err::DiagonalInput)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rotor
