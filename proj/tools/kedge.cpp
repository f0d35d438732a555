// kedge: k-edge statistics, crossing-number bounds and extremal constructions.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kedge/acceptance.hpp"
#include "kedge/bounds.hpp"
#include "kedge/central.hpp"
#include "kedge/constructions.hpp"
#include "kedge/edge_stats.hpp"
#include "kedge/errors.hpp"
#include "kedge/golden.hpp"
#include "kedge/point_io.hpp"

using json = nlohmann::ordered_json;
using namespace kedge;

namespace {

// Either a point set or a halfperiod, detected from the line structure.
struct Input {
  std::vector<Point> points;
  std::optional<Halfperiod> halfperiod;
};

Input load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto lines = content_lines(buf);
  if (lines.empty()) throw InputError("'" + path + "' is empty");
  long long n = 0;
  std::istringstream(lines[0]) >> n;
  Input input;
  std::istringstream again(buf.str());
  if (n >= 1 && lines.size() == static_cast<std::size_t>(n * (n - 1) / 2 + 2) &&
      lines.size() != static_cast<std::size_t>(n + 1)) {
    input.halfperiod = read_halfperiod(again);
    require_valid(*input.halfperiod);
  } else {
    input.points = read_points(again);
  }
  return input;
}

Halfperiod halfperiod_of(const Input& in, bool break_ties) {
  if (in.halfperiod) return *in.halfperiod;
  return halfperiod_from_points(in.points, SweepOptions{.break_ties = break_ties});
}

json to_json(const EdgeVector& v) { return json(v.counts); }

json to_json(const CrossingReport& r) {
  json j;
  j["n"] = r.n;
  j["edge_vector"] = to_json(r.edge_vector);
  j["E_leq"] = r.edge_vector.leq();
  j["halving_lines"] = r.edge_vector.halving_lines();
  j["crossings"] = r.cr_bruteforce;
  j["identity_check"] = r.consistent();
  return j;
}

json to_json(const CentralReport& r) {
  json j;
  j["k"] = r.k;
  j["s"] = r.s;
  j["K"] = r.K;
  j["A"] = r.A;
  j["N"] = r.N;
  j["R"] = r.R;
  j["C"] = r.C;
  j["S_light"] = r.S_light;
  j["S_heavy"] = r.S_heavy;
  j["E_geq_k"] = r.E_geq_k;
  j["bound_value"] = to_string(r.bound_value);
  j["holds"] = r.holds;
  j["auxiliary_failures"] = r.auxiliary_failures;
  return j;
}

void write_output(const std::string& path, const std::vector<Point>& pts, const std::string& comment) {
  if (path.empty() || path == "-") write_points(std::cout, pts, comment);
  else write_points_file(path, pts, comment);
}

int cmd_analyze(const std::string& file) {
  auto in = load(file);
  auto rep = in.halfperiod ? summarize(*in.halfperiod) : summarize(std::span<const Point>(in.points));
  std::cout << to_json(rep).dump(2) << '\n';
  return rep.consistent() ? 0 : 1;
}

int cmd_halfperiod(const std::string& file, const std::string& out, bool break_ties) {
  auto in = load(file);
  auto h = halfperiod_of(in, break_ties);
  if (out.empty() || out == "-") {
    write_halfperiod(std::cout, h);
  } else {
    std::ofstream o(out);
    if (!o) throw InputError("cannot write '" + out + "'");
    write_halfperiod(o, h);
  }
  return 0;
}

int cmd_classify(const std::string& file, std::size_t k, bool raw, bool break_ties) {
  auto h = halfperiod_of(load(file), break_ties);
  require_k_range(h.n(), k);
  auto used = raw ? h : rearrange_essential(h, k);
  auto recs = classify(used, k);
  json j;
  j["n"] = h.n();
  j["k"] = k;
  j["rearranged"] = !raw;
  json arr = json::array();
  for (const auto& r : recs) {
    const auto& t = used[r.step - 1];
    json e;
    e["step"] = r.step;
    e["position"] = t.position;
    e["labels"] = {t.first + 1, t.second + 1};
    e["block"] = r.block;
    e["class"] = to_string(r.cls);
    if (r.cls == SwapClass::augmenting) e["m"] = r.m;
    if (r.weight >= 0) {
      e["entering"] = r.entering + 1;
      e["weight"] = r.weight;
      e["heavy"] = r.heavy;
    }
    if (r.cls == SwapClass::center) e["essential"] = r.essential;
    arr.push_back(e);
  }
  j["records"] = arr;
  auto rep = verify_central(h, k);
  j["report"] = to_json(rep);
  std::cout << j.dump(2) << '\n';
  return rep.all_ok() ? 0 : 1;
}

int cmd_bounds(std::int64_t n, std::optional<std::int64_t> k, const std::string& format) {
  auto t = bound_table(n);
  auto show = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      if (k && r.k != *k) continue;
      json e;
      e["k"] = r.k;
      e["aichholzer"] = r.aichholzer;
      e["u"] = r.u ? json(*r.u) : json(nullptr);
      e["u_prime"] = r.u_prime ? json(*r.u_prime) : json(nullptr);
      e["explicit"] = r.explicit_value ? json(r.explicit_value->approx()) : json(nullptr);
      e["best"] = r.best;
      e["source"] = r.source;
      rows.push_back(e);
    }
    std::cout << json{{"n", n}, {"rows", rows}}.dump(2) << '\n';
    return 0;
  }
  std::cout << "n = " << n << "  (lower bounds on E_<=k)\n";
  std::cout << std::setw(4) << "k" << std::setw(12) << "aichholzer" << std::setw(10) << "u_k" << std::setw(10)
            << "u'_k" << std::setw(14) << "explicit" << std::setw(10) << "best" << "  source\n";
  for (const auto& r : t.rows) {
    if (k && r.k != *k) continue;
    std::ostringstream ex;
    if (r.explicit_value) ex << std::fixed << std::setprecision(2) << r.explicit_value->approx();
    else ex << "-";
    std::cout << std::setw(4) << r.k << std::setw(12) << r.aichholzer << std::setw(10) << show(r.u) << std::setw(10)
              << show(r.u_prime) << std::setw(14) << ex.str() << std::setw(10) << r.best << "  " << r.source << '\n';
  }
  if (k && (*k < 0 || *k >= static_cast<std::int64_t>(t.rows.size())))
    throw InputError("k out of range for n = " + std::to_string(n));
  return 0;
}

int cmd_cr_bound(std::int64_t n, const std::string& pipeline, const std::string& format) {
  auto r = cr_lower_bound(n, parse_pipeline(pipeline));
  if (format == "json") {
    std::cout << json{{"n", n}, {"pipeline", to_string(r.pipeline)}, {"value", r.value}, {"per_k", r.per_k}}.dump(2)
              << '\n';
  } else {
    std::cout << r.value << '\n';
  }
  return 0;
}

void print_columns(const std::vector<std::pair<std::int64_t, std::int64_t>>& cells, std::size_t rows) {
  const std::size_t cols = (cells.size() + rows - 1) / rows;
  for (std::size_t r = 0; r < rows && r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t i = c * rows + r;
      if (i >= cells.size()) break;
      std::cout << (c ? " | " : "") << std::setw(3) << cells[i].first << ' ' << std::setw(8) << cells[i].second;
    }
    std::cout << '\n';
  }
}

int cmd_cr_table(std::int64_t from, std::int64_t to, const std::string& format) {
  if (from < 8 || to < from) throw InputError("need 8 <= from <= to");
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t n = from; n <= to; ++n) cells.emplace_back(n, cr_lower_bound(n, Pipeline::section5).value);
  if (format == "csv") {
    std::cout << "n,cr_lower_bound\n";
    for (const auto& [n, v] : cells) std::cout << n << ',' << v << '\n';
  } else {
    print_columns(cells, 12);
  }
  return 0;
}

int cmd_tables(const std::string& which, bool check, const std::string& format) {
  int mismatches = 0;
  auto mark = [&](bool ok) {
    if (!ok) ++mismatches;
    return check ? (ok ? "" : " *") : "";
  };
  const bool csv = format == "csv";
  if (which == "table1") {
    std::ostringstream ns, hs, cs;
    if (csv) std::cout << "n,halving,crossing\n";
    for (const auto& c : golden::table1()) {
      auto h = halving_upper_bound(c.n);
      auto cr = cr_lower_bound(c.n, Pipeline::table1).value;
      std::string mh = mark(h == c.halving), mc = mark(cr == c.crossing);
      if (csv) std::cout << c.n << ',' << h << ',' << cr << '\n';
      ns << std::setw(8) << c.n;
      hs << std::setw(8) << (std::to_string(h) + mh);
      cs << std::setw(8) << (std::to_string(cr) + mc);
    }
    if (!csv) std::cout << "n     " << ns.str() << "\nh(n)  " << hs.str() << "\ncr(n) " << cs.str() << '\n';
  } else if (which == "table2") {
    std::ostringstream ns, ls, us;
    if (csv) std::cout << "n,halving_lower,halving_upper\n";
    for (const auto& c : golden::table2()) {
      auto h = halving_upper_bound(c.n);
      std::string mu = mark(h == c.halving_upper);
      if (csv) std::cout << c.n << ',' << c.halving_lower << ',' << h << '\n';
      ns << std::setw(8) << c.n;
      ls << std::setw(8) << c.halving_lower;
      us << std::setw(8) << (std::to_string(h) + mu);
    }
    if (!csv) std::cout << "n      " << ns.str() << "\nh >=   " << ls.str() << "\nh <=   " << us.str() << '\n';
  } else if (which == "section5") {
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (const auto& [n, v] : golden::section5()) {
      auto got = cr_lower_bound(n, Pipeline::section5).value;
      mark(got == v);
      cells.emplace_back(n, got);
    }
    if (csv) {
      std::cout << "n,cr_lower_bound\n";
      for (const auto& [n, v] : cells) std::cout << n << ',' << v << '\n';
    } else {
      print_columns(cells, 12);
    }
  } else {
    throw InputError("unknown table '" + which + "'");
  }
  if (check) {
    std::cout << (mismatches == 0 ? "check: all values match\n"
                                  : "check: " + std::to_string(mismatches) + " mismatch(es)\n");
    return mismatches == 0 ? 0 : 1;
  }
  return 0;
}

int cmd_selftest(const std::string& scope, const AcceptanceOptions& opt) {
  bool all = true;
  for (int id : criteria_for_scope(scope)) {
    auto r = run_criterion(id, opt);
    std::cout << format_result(r) << std::endl;
    all = all && r.passed();
  }
  return all ? 0 : 1;
}

std::vector<int> parse_partition(const std::string& spec, const std::vector<Point>& pts) {
  std::vector<int> cls;
  const std::size_t n = pts.size();
  if (spec == "thirds") {
    for (std::size_t i = 0; i < n; ++i) cls.push_back(static_cast<int>(3 * i / std::max<std::size_t>(n, 1)));
  } else if (spec == "labels") {
    for (const auto& p : pts) {
      if (p.label.empty()) throw InputError("point without label");
      char c = p.label[0];
      if (c < 'a' || c > 'c') throw InputError("label '" + p.label + "' does not start with a, b or c");
      cls.push_back(c - 'a');
    }
  } else {
    if (spec.size() != n) throw InputError("partition string must have one letter per point");
    for (char c : spec) {
      if (c < 'a' || c > 'c') throw InputError("partition letters must be a, b or c");
      cls.push_back(c - 'a');
    }
  }
  return cls;
}

int cmd_decompose3(const std::string& file, const std::string& spec) {
  auto pts = read_points_file(file);
  auto d = check_3decomposable(pts, parse_partition(spec, pts));
  json j;
  j["decomposable"] = d.found;
  json dirs = json::array();
  for (const auto& dir : d.directions) {
    if (dir) dirs.push_back({to_string(dir->x), to_string(dir->y)});
    else dirs.push_back(nullptr);
  }
  j["directions"] = dirs;
  std::cout << j.dump(2) << '\n';
  return d.found ? 0 : 1;
}

int cmd_verify_sr(int r, unsigned precision) {
  SrConfig cfg;
  cfg.r = r;
  cfg.precision = precision;
  auto b = build_sr(cfg);
  for (const auto& c : b.certificates) std::cout << "# " << c << '\n';
  auto a = audit_sr(b);
  std::cout << std::setw(4) << "k" << std::setw(10) << "E_<=k" << std::setw(10) << "target" << std::setw(8) << "bi"
            << std::setw(8) << "mono" << '\n';
  for (std::size_t k = 0; k < a.measured_leq.size(); ++k) {
    std::cout << std::setw(4) << k << std::setw(10) << a.measured_leq[k] << std::setw(10) << a.target_leq[k]
              << std::setw(8) << a.measured_bi[k] << std::setw(8) << a.measured_mono[k]
              << (a.measured_leq[k] == a.target_leq[k] ? "" : "  MISMATCH") << '\n';
  }
  std::cout << "3-symmetry: " << (a.symmetric ? "certified" : "FAILED") << '\n';
  std::cout << (a.ok() ? "verified" : "FAILED") << '\n';
  return a.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-edges, halving lines and rectilinear crossing numbers"};
  app.require_subcommand(1);

  std::string file, out, scope, which, pipeline = "table1", format = "text", partition = "thirds";
  std::int64_t n = 0, from = 28, to = 99;
  std::optional<std::int64_t> k_opt;
  std::size_t k = 1;
  bool raw = false, perturbed = false, check = false, break_ties = false;
  int r = 3;
  std::size_t t = 1, m = 1;
  unsigned precision = 40, poly_precision = 12;
  std::string epsilon = "1/1000";
  AcceptanceOptions opt;

  auto* analyze = app.add_subcommand("analyze", "edge vector, halving lines and crossings of a point or halfperiod file");
  analyze->add_option("file", file)->required();

  auto* hp = app.add_subcommand("halfperiod", "write the halfperiod of a point file");
  hp->add_option("file", file)->required();
  hp->add_option("-o,--output", out);
  hp->add_flag("--break-ties", break_ties, "order parallel spanned lines by pair index");

  auto* cls = app.add_subcommand("classify", "classify the k-critical swaps and check the central inequality");
  cls->add_option("file", file)->required();
  cls->add_option("--k", k)->required();
  cls->add_flag("--raw", raw, "classify without rearranging nonessential swaps");
  cls->add_flag("--break-ties", break_ties);

  auto* bnd = app.add_subcommand("bounds", "lower bounds on E_<=k for one n");
  bnd->add_option("--n", n)->required();
  bnd->add_option("--k", k_opt);
  bnd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* hb = app.add_subcommand("halving-bound", "upper bound on the number of halving lines");
  hb->add_option("--n", n)->required();

  auto* crb = app.add_subcommand("cr-bound", "lower bound on the rectilinear crossing number");
  crb->add_option("--n", n)->required();
  crb->add_option("--pipeline", pipeline)->check(CLI::IsMember({"table1", "section5"}));
  crb->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* crt = app.add_subcommand("cr-table", "crossing lower bounds over a range of n");
  crt->add_option("--from", from);
  crt->add_option("--to", to);
  crt->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* tab = app.add_subcommand("tables", "recompute a published table");
  tab->add_option("which", which)->required()->check(CLI::IsMember({"table1", "table2", "section5"}));
  tab->add_flag("--check", check, "compare against the embedded published values");
  tab->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* st = app.add_subcommand("selftest", "run acceptance criteria");
  st->add_option("scope", scope)->required()->check(
      CLI::IsMember({"bounds", "identity", "central", "constructions", "all"}));
  st->add_option("--trials", opt.trials);
  st->add_option("--nmin", opt.nmin);
  st->add_option("--nmax", opt.nmax);
  st->add_option("--rmax", opt.rmax);
  st->add_option("--seed", opt.seed);

  auto* con = app.add_subcommand("construct", "generate an extremal point set");
  con->require_subcommand(1);
  auto* con_sr = con->add_subcommand("sr", "the 9r-point set S_r");
  con_sr->add_option("--r", r);
  con_sr->add_option("--precision", precision, "digits of the rotation approximation");
  con_sr->add_option("-o,--output", out);
  auto* raw_flag = con_sr->add_flag("--raw", raw, "emit the unperturbed set (has collinear triples)");
  con_sr->add_flag("--perturbed", perturbed, "emit the perturbed set (default)")->excludes(raw_flag);
  auto* con_pc = con->add_subcommand("polygon-center", "(2k+1)-gon plus n-2k-1 central points");
  con_pc->add_option("--k", k)->required();
  con_pc->add_option("--n", n)->required();
  con_pc->add_option("--precision", poly_precision);
  con_pc->add_option("-o,--output", out);
  auto* con_cp = con->add_subcommand("cluster-polygon", "(2t+1)-gon with m points per vertex");
  con_cp->add_option("--t", t)->required();
  con_cp->add_option("--m", m)->required();
  con_cp->add_option("--epsilon", epsilon);
  con_cp->add_option("--precision", poly_precision);
  con_cp->add_option("-o,--output", out);

  auto* ver = app.add_subcommand("verify", "audit a construction against its closed forms");
  ver->require_subcommand(1);
  auto* ver_sr = ver->add_subcommand("sr", "E_<=k of S_r for k <= 4r-1");
  ver_sr->add_option("--r", r);
  ver_sr->add_option("--precision", precision);

  auto* dec = app.add_subcommand("decompose3", "search for a 3-decomposition witness");
  dec->add_option("file", file)->required();
  dec->add_option("--partition", partition, "thirds, labels, or one of a/b/c per point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(file);
    if (*hp) return cmd_halfperiod(file, out, break_ties);
    if (*cls) return cmd_classify(file, k, raw, break_ties);
    if (*bnd) return cmd_bounds(n, k_opt, format);
    if (*hb) {
      std::cout << halving_upper_bound(n) << '\n';
      return 0;
    }
    if (*crb) return cmd_cr_bound(n, pipeline, format);
    if (*crt) return cmd_cr_table(from, to, format);
    if (*tab) return cmd_tables(which, check, format);
    if (*st) return cmd_selftest(scope, opt);
    if (*con_sr) {
      SrConfig cfg;
      cfg.r = r;
      cfg.precision = precision;
      auto b = build_sr(cfg);
      const auto& s = raw ? b.raw : b.perturbed;
      write_output(out, s.points, std::string("S_") + std::to_string(r) + (raw ? " (raw)" : " (perturbed)"));
      return 0;
    }
    if (*con_pc) {
      auto e = build_polygon_center(k, static_cast<std::size_t>(n), poly_precision);
      write_output(out, e.points, "polygon-center k=" + std::to_string(k) + " n=" + std::to_string(n));
      return 0;
    }
    if (*con_cp) {
      auto e = build_cluster_polygon(t, m, parse_rational(epsilon), poly_precision);
      write_output(out, e.points, "cluster-polygon t=" + std::to_string(t) + " m=" + std::to_string(m));
      return 0;
    }
    if (*ver_sr) return cmd_verify_sr(r, precision);
    if (*dec) return cmd_decompose3(file, partition);
  } catch (const NotInGeneralPosition& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& tr : e.triples()) std::cerr << "  collinear: " << tr[0] + 1 << ' ' << tr[1] + 1 << ' ' << tr[2] + 1 << '\n';
    return 2;
  } catch (const DirectionTie& e) {
    std::cerr << "error: " << e.what() << " (use --break-ties)\n";
    for (const auto& p : e.pairs())
      std::cerr << "  parallel: " << p[0] + 1 << '-' << p[1] + 1 << " and " << p[2] + 1 << '-' << p[3] + 1 << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
