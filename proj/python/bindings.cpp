#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kedge/acceptance.hpp"
#include "kedge/bounds.hpp"
#include "kedge/central.hpp"
#include "kedge/constructions.hpp"
#include "kedge/edge_stats.hpp"
#include "kedge/golden.hpp"
#include "kedge/halfperiod.hpp"
#include "kedge/point_io.hpp"

namespace py = pybind11;
using namespace kedge;

namespace {

py::object fraction(const Rational& q) {
  // leaked so it is never released after interpreter shutdown
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(to_string(q));
}

// Accepts int, str ("p/q") or fractions.Fraction for each coordinate.
Rational to_rational(const py::handle& v) {
  if (py::isinstance<py::int_>(v) || py::isinstance<py::str>(v)) return parse_rational(py::str(v).cast<std::string>());
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator")) {
    Rational q(Integer(py::str(v.attr("numerator")).cast<std::string>()),
               Integer(py::str(v.attr("denominator")).cast<std::string>()));
    q.canonicalize();
    return q;
  }
  throw InputError("coordinates must be int, str or Fraction");
}

std::vector<Point> to_points(const py::iterable& pts) {
  std::vector<Point> out;
  for (auto item : pts) {
    auto seq = py::reinterpret_borrow<py::sequence>(item);
    if (seq.size() < 2) throw InputError("each point needs two coordinates");
    out.emplace_back(to_rational(seq[0]), to_rational(seq[1]));
  }
  return out;
}

py::list from_points(const std::vector<Point>& pts) {
  py::list out;
  for (const auto& p : pts) {
    if (p.label.empty()) out.append(py::make_tuple(fraction(p.x), fraction(p.y)));
    else out.append(py::make_tuple(fraction(p.x), fraction(p.y), p.label));
  }
  return out;
}

py::dict report_dict(const CrossingReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["edge_vector"] = r.edge_vector.counts;
  d["E_leq"] = r.edge_vector.leq();
  d["halving_lines"] = r.edge_vector.halving_lines();
  d["crossings"] = r.cr_bruteforce;
  d["identity_check"] = r.consistent();
  return d;
}

py::dict central_dict(const CentralReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["k"] = r.k;
  d["s"] = r.s;
  d["K"] = r.K;
  d["A"] = r.A;
  d["N"] = r.N;
  d["R"] = r.R;
  d["C"] = r.C;
  d["S_light"] = r.S_light;
  d["S_heavy"] = r.S_heavy;
  d["E_geq_k"] = r.E_geq_k;
  d["bound_value"] = fraction(r.bound_value);
  d["holds"] = r.holds;
  d["auxiliary_failures"] = r.auxiliary_failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-edge statistics, crossing-number bounds and extremal constructions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("summarize", [](const py::iterable& pts) { return report_dict(summarize(to_points(pts))); },
        py::arg("points"));
  m.def("edge_vector", [](const py::iterable& pts) { return edge_vector_bruteforce(to_points(pts)).counts; },
        py::arg("points"));
  m.def("crossings", [](const py::iterable& pts) { return crossings_bruteforce(to_points(pts)); },
        py::arg("points"));
  m.def(
      "collinear_triples",
      [](const py::iterable& pts) {
        py::list out;
        for (const auto& t : check_general_position(to_points(pts))) out.append(py::make_tuple(t[0], t[1], t[2]));
        return out;
      },
      py::arg("points"));
  m.def(
      "halfperiod",
      [](const py::iterable& pts, bool break_ties) {
        std::ostringstream out;
        write_halfperiod(out, halfperiod_from_points(to_points(pts), SweepOptions{.break_ties = break_ties}));
        return out.str();
      },
      py::arg("points"), py::arg("break_ties") = false);
  m.def(
      "verify_central",
      [](const py::iterable& pts, std::size_t k) {
        return central_dict(verify_central(halfperiod_from_points(to_points(pts)), k));
      },
      py::arg("points"), py::arg("k"));

  m.def("read_points", [](const std::string& path) { return from_points(read_points_file(path)); },
        py::arg("path"));

  m.def("aichholzer_bound", &aichholzer_bound, py::arg("n"), py::arg("k"));
  m.def("halving_upper_bound", &halving_upper_bound, py::arg("n"));
  m.def(
      "cr_lower_bound",
      [](std::int64_t n, const std::string& pipeline) {
        auto r = cr_lower_bound(n, parse_pipeline(pipeline));
        py::dict d;
        d["n"] = r.n;
        d["value"] = r.value;
        d["exact_value"] = fraction(r.exact_value);
        d["per_k"] = r.per_k;
        return d;
      },
      py::arg("n"), py::arg("pipeline") = "section5");
  m.def(
      "bound_table",
      [](std::int64_t n) {
        py::list rows;
        for (const auto& r : bound_table(n).rows) {
          py::dict d;
          d["k"] = r.k;
          d["aichholzer"] = r.aichholzer;
          d["u"] = r.u;
          d["u_prime"] = r.u_prime;
          d["best"] = r.best;
          d["source"] = r.source;
          rows.append(d);
        }
        return rows;
      },
      py::arg("n"));

  m.def(
      "build_sr",
      [](int r, unsigned precision, bool raw) {
        SrConfig cfg;
        cfg.r = r;
        cfg.precision = precision;
        auto b = build_sr(cfg);
        return from_points(raw ? b.raw.points : b.perturbed.points);
      },
      py::arg("r") = 3, py::arg("precision") = 40, py::arg("raw") = false);
  m.def("sr_target_leq", &sr_target_leq, py::arg("r"), py::arg("k"));
  m.def(
      "polygon_center", [](std::size_t k, std::size_t n) { return from_points(build_polygon_center(k, n).points); },
      py::arg("k"), py::arg("n"));
  m.def(
      "cluster_polygon",
      [](std::size_t t, std::size_t mult) { return from_points(build_cluster_polygon(t, mult).points); },
      py::arg("t"), py::arg("m"));

  m.def("table1", [] {
    py::list out;
    for (const auto& c : golden::table1()) out.append(py::make_tuple(c.n, c.halving, c.crossing));
    return out;
  });
  m.def("section5", [] { return golden::section5(); });

  m.def(
      "selftest",
      [](const std::string& scope, std::size_t trials, std::size_t nmax, int rmax, std::uint64_t seed) {
        AcceptanceOptions opt;
        opt.trials = trials;
        opt.nmax = nmax;
        opt.rmax = rmax;
        opt.seed = seed;
        py::list out;
        for (const auto& r : run_acceptance(scope, opt)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed();
          d["seconds"] = r.seconds;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("scope"), py::arg("trials") = 500, py::arg("nmax") = 12, py::arg("rmax") = 5,
      py::arg("seed") = AcceptanceOptions{}.seed);
}
