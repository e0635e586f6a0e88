#include "almg/cli.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "almg/algebra_io.hpp"
#include "almg/checks.hpp"
#include "almg/geometry.hpp"
#include "almg/intervals.hpp"
#include "almg/models.hpp"
#include "almg/parallel.hpp"
#include "almg/report.hpp"
#include "almg/search.hpp"

namespace almg {
namespace {

// Raised for bad arguments discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  unsigned threads = 0;
  std::size_t witness_cap = 16;
};

class Session {
 public:
  Session(const Globals& g, std::string input) : g_(g) {
    doc_.tool_version = tool_version();
    doc_.input = std::move(input);
  }

  CheckOptions options() const {
    CheckOptions o;
    o.witness_cap = g_.witness_cap;
    return o;
  }

  template <class F>
  auto timed(std::string name, std::string kind, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto value = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    doc_.entries.push_back({std::move(name), std::move(kind), to_json(value), s});
    return value;
  }

  void value(std::string name, json v) {
    doc_.entries.push_back({std::move(name), "value", std::move(v), 0.0});
  }

  void fail() { status_ = kExitFail; }
  int status() const { return status_; }

  void emit(std::ostream& out) const {
    if (g_.json) {
      out << doc_.dump();
      return;
    }
    for (const auto& e : doc_.entries) print_entry(out, e);
  }

 private:
  static void print_check(std::ostream& out, const json& r, const std::string& indent) {
    out << indent << (r["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
        << r["name"].get<std::string>() << "  checked=" << r["checked"]
        << " skipped=" << r["skipped"];
    if (!r["passed"].get<bool>()) out << " failures=" << r["failures"];
    out << "\n";
    for (const auto& w : r["witnesses"]) {
      out << indent << "    " << w["law"].get<std::string>() << " (";
      bool first = true;
      for (const auto& e : w["tuple"]) {
        out << (first ? "" : ", ") << e.get<unsigned>();
        first = false;
      }
      out << ")\n";
    }
    if (r["truncated"].get<bool>())
      out << indent << "    ... " << (r["failures"].get<std::uint64_t>() - r["witnesses"].size())
          << " more\n";
    for (const auto& [k, v] : r["details"].items())
      out << indent << "    " << k << ": " << v.get<std::string>() << "\n";
  }

  static void print_classification(std::ostream& out, const json& c) {
    auto yn = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
    out << "AL-monoid: " << yn(c["al_monoid"]) << "  representable: " << yn(c["representable"])
        << "  lattice-ordered: " << yn(c["lattice_ordered"])
        << "  semiregular: " << yn(c["semiregular"])
        << "  autometrized: " << yn(c["autometrized"]) << "\n";
    for (const auto& r : c["reports"]) print_check(out, r, "  ");
  }

  static void print_entry(std::ostream& out, const ReportEntry& e) {
    const json& r = e.result;
    if (e.kind == "check") {
      print_check(out, r, "");
    } else if (e.kind == "classification") {
      print_classification(out, r);
    } else if (e.kind == "theorem_suite") {
      print_classification(out, r["classification"]);
      if (r["theorems_skipped"].get<bool>())
        out << "theorems: skipped (not an AL-monoid)\n";
      else
        out << "theorems:\n";
      for (const auto& t : r["theorems"]) print_check(out, t, "  ");
      out << "predicates:\n";
      for (const auto& t : r["predicates"]) print_check(out, t, "  ");
      if (!r["findings"].empty()) out << "findings:\n";
      for (const auto& t : r["findings"]) print_check(out, t, "  ");
    } else if (e.kind == "enumeration") {
      out << e.name << ": emitted " << r["emitted"] << " (found " << r["found"]
          << ", dedup collapsed " << r["dedup_collapsed"] << "), nodes " << r["nodes"]
          << ", pruned " << r["pruned"] << ", "
          << (r["exhausted"].get<bool>() ? "exhausted" : "budget hit, not exhausted") << "\n";
      std::size_t i = 0;
      for (const auto& a : r["algebras"])
        out << "# algebra " << ++i << "\n" << a.get<std::string>();
    } else {
      out << e.name << ": " << (r.is_string() ? r.get<std::string>() : r.dump()) << "\n";
    }
  }

  const Globals& g_;
  ReportDocument doc_;
  int status_ = kExitPass;
};

struct AlgebraSource {
  std::string file;
  std::string model;

  void add_to(CLI::App* cmd) {
    cmd->add_option("file", file, "Algebra file");
    cmd->add_option("--model", model, "Build a model instead, e.g. boolean:2 or z-uv:8");
  }

  Algebra load() const {
    if (file.empty() == model.empty())
      throw UsageError("give exactly one of an algebra file or --model");
    if (!model.empty()) return build_model(parse_model_spec(model));
    return read_algebra_file(file);
  }

  std::string describe() const { return model.empty() ? "file:" + file : "model:" + model; }
};

Elem parse_elem(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || v >= kMaxCarrier)
    throw UsageError("invalid element '" + s + "'");
  return static_cast<Elem>(v);
}

json elems_json(const std::vector<Elem>& v) { return json(v); }

json triangle_json(const Triangle& t) { return json::array({t.a(), t.b(), t.c()}); }

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, const AlgebraSource& src, const std::vector<std::string>& only,
              bool drl, bool distributivity, std::ostream& out) {
  const Algebra alg = src.load();
  Session s(g, "check " + src.describe());
  auto opts = s.options();
  opts.distributivity = distributivity;
  const auto c = s.timed("classification", "classification", [&] { return classify(alg, opts); });
  std::vector<std::string> requested = only;
  if (requested.empty())
    for (const auto& r : c.reports) requested.push_back(r.name);
  for (const auto& name : requested) {
    const CheckReport* r = c.find(name);
    if (!r) throw UsageError("unknown check '" + name + "'");
    if (!r->passed) s.fail();
  }
  if (drl) {
    const auto r = s.timed("drl_compatible", "check", [&] { return is_drl_compatible(alg, opts); });
    if (!r.passed) s.fail();
  }
  s.emit(out);
  return s.status();
}

int cmd_geometry(const Globals& g, const AlgebraSource& src,
                 const std::vector<std::string>& predicate, std::ostream& out) {
  const Algebra alg = src.load();
  Session s(g, "geometry " + src.describe());
  const auto opts = s.options();

  if (predicate.empty()) {
    const auto suite = s.timed("theorem_suite", "theorem_suite",
                               [&] { return run_theorem_suite(alg, opts); });
    if (!suite.all_theorems_passed()) s.fail();
    s.emit(out);
    return s.status();
  }

  const std::string& name = predicate.front();
  std::vector<Elem> args;
  for (std::size_t i = 1; i < predicate.size(); ++i) args.push_back(parse_elem(predicate[i]));
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw UsageError("predicate '" + name + "' takes " + std::to_string(k) + " elements");
  };
  auto verdict = [&](bool v) {
    s.value(name, v);
    if (!v) s.fail();
  };
  auto check = [&](const char* label, const std::function<CheckReport()>& f) {
    need(0);
    if (!s.timed(label, "check", f).passed) s.fail();
  };

  if (name == "M") {
    need(3);
    verdict(metric_between(alg, args[0], args[1], args[2]));
  } else if (name == "L") {
    need(3);
    verdict(lattice_between(alg, args[0], args[1], args[2]));
  } else if (name == "fixty") {
    need(3);
    verdict(has_fixty(alg, Triangle(args[0], args[1], args[2])));
  } else if (name == "subgeometry") {
    verdict(is_subgeometry(alg, args));
  } else if (name == "b-linear" || name == "d-linear") {
    const auto lab = name == "b-linear" ? is_b_linear(alg, args) : is_d_linear(alg, args);
    s.value(name, lab ? json{{"linear", true}, {"labeling", elems_json(*lab)}}
                      : json{{"linear", false}});
    if (!lab) s.fail();
  } else if (name == "equilateral") {
    need(0);
    const auto t = find_equilateral(alg);
    s.value(name, t ? triangle_json(*t) : json(nullptr));
    if (t) s.fail();
  } else if (name == "isosceles" || name == "fixty-triangles") {
    need(0);
    json list = json::array();
    for (const auto& t : name == "isosceles" ? find_isosceles(alg) : find_fixty_triangles(alg))
      list.push_back(triangle_json(t));
    s.value(name, list);
  } else if (name == "atoms") {
    need(0);
    s.value(name, elems_json(atoms(alg)));
  } else if (name == "drl") {
    need(2);
    const auto d = drl_difference(alg, args[0], args[1]);
    s.value(name, d ? json(*d) : json(nullptr));
    if (!d) s.fail();
  } else if (name == "t1") {
    check("t1", [&] { return check_t1(alg, opts); });
  } else if (name == "t2") {
    check("t2", [&] { return check_t2(alg, opts); });
  } else if (name == "beta") {
    check("beta", [&] { return check_beta(alg, opts); });
  } else if (name == "ptolemaic") {
    check("ptolemaic", [&] { return check_ptolemaic(alg, opts); });
  } else if (name == "convex") {
    check("metrically_convex", [&] { return is_metrically_convex(alg, opts); });
  } else if (name == "four-way") {
    check("four_way_equivalence", [&] { return check_four_way_equivalence(alg, opts); });
  } else if (name == "quadrilateral") {
    check("quadrilateral_lemma", [&] { return check_quadrilateral_lemma(alg, opts); });
  } else if (name == "star-monotone") {
    check("star_monotone", [&] { return check_star_monotone(alg, opts); });
  } else {
    throw UsageError("unknown predicate '" + name +
                     "' (M, L, fixty, subgeometry, b-linear, d-linear, equilateral, isosceles, "
                     "fixty-triangles, atoms, drl, t1, t2, beta, ptolemaic, convex, four-way, "
                     "quadrilateral, star-monotone)");
  }
  s.emit(out);
  return s.status();
}

void write_outputs(const std::string& dir, const EnumerationResult& r) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  json files = json::array();
  for (std::size_t i = 0; i < r.algebras.size(); ++i) {
    std::ostringstream name;
    name << "algebra-" << std::setw(4) << std::setfill('0') << i + 1 << ".alg";
    std::ofstream(fs::path(dir) / name.str()) << format_algebra(r.algebras[i]);
    files.push_back(name.str());
  }
  json summary = to_json(r);
  summary.erase("algebras");
  summary["files"] = files;
  std::ofstream(fs::path(dir) / "summary.json") << summary.dump(2) << "\n";
}

// Every emitted algebra must re-pass require and re-fail violate.
CheckReport reverify(const EnumerationResult& r, const std::vector<Axiom>& require,
                     const std::vector<Axiom>& violate) {
  ReportBuilder b("reverification", 16);
  for (std::size_t i = 0; i < r.algebras.size(); ++i) {
    for (Axiom a : require)
      b.record(std::string(axiom_name(a)) + "_holds",
               truth(check_axiom(r.algebras[i], a).passed), {static_cast<Elem>(i)});
    for (Axiom a : violate)
      b.record(std::string(axiom_name(a)) + "_fails",
               truth(!check_axiom(r.algebras[i], a).passed), {static_cast<Elem>(i)});
  }
  return std::move(b).finish();
}

int run_search(const Globals& g, const SearchSpec& spec, const std::string& label,
               const std::string& out_dir, bool suite, std::ostream& out) {
  Session s(g, label);
  const auto r = s.timed("enumeration", "enumeration", [&] { return search_counterexample(spec); });
  const auto check = s.timed("reverification", "check",
                             [&] { return reverify(r, spec.require, spec.violate); });
  if (!check.passed) s.fail();
  if (suite) {
    const auto summary = s.timed("theorem_suite_all", "check", [&] {
      ReportBuilder b("theorem_suite_all", g.witness_cap);
      for (std::size_t i = 0; i < r.algebras.size(); ++i) {
        const auto t = run_theorem_suite(r.algebras[i], s.options());
        for (const auto& th : t.theorems)
          b.record(th.name, truth(th.passed), {static_cast<Elem>(i)});
      }
      return std::move(b).finish();
    });
    if (!summary.passed) s.fail();
  }
  if (!out_dir.empty()) write_outputs(out_dir, r);
  s.emit(out);
  return s.status();
}

std::vector<Axiom> parse_axioms(const std::vector<std::string>& names) {
  std::vector<Axiom> out;
  for (const auto& n : names) out.push_back(parse_axiom(n));
  return out;
}

int cmd_intervals(const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
  const std::string usage =
      "demos: ex, fixty, eval <A> union|meet|star <B>, axiom2 <A> <B>";
  if (args.empty()) throw UsageError("intervals needs a demo name; " + usage);
  const std::string& demo = args.front();
  Session s(g, "intervals " + demo);
  if (demo == "ex" || demo == "fixty") {
    if (args.size() != 1) throw UsageError(demo + " takes no arguments");
    const auto r = s.timed(demo == "ex" ? "demo_axiom4_failure" : "demo_fixty_nonzero_meet",
                           "check", demo == "ex" ? demo_axiom4_failure : demo_fixty_nonzero_meet);
    if (!r.passed) s.fail();
  } else if (demo == "eval") {
    if (args.size() != 4) throw UsageError("usage: eval <A> union|meet|star <B>");
    const auto a = parse_interval_set(args[1]);
    const auto b = parse_interval_set(args[3]);
    IntervalSet r;
    if (args[2] == "union")
      r = iv_union(a, b);
    else if (args[2] == "meet")
      r = iv_intersect(a, b);
    else if (args[2] == "star")
      r = iv_star(a, b);
    else
      throw UsageError("unknown interval operation '" + args[2] + "'");
    s.value(a.to_string() + " " + args[2] + " " + b.to_string(), r.to_string());
  } else if (demo == "axiom2") {
    if (args.size() != 3) throw UsageError("usage: axiom2 <A> <B>");
    const auto r = s.timed("closed_sets_axiom2", "check", [&] {
      return iv_check_axiom2_sample({{parse_interval_set(args[1]), parse_interval_set(args[2])}},
                                    s.options());
    });
    if (!r.passed) s.fail();
  } else {
    throw UsageError("unknown demo '" + demo + "'; " + usage);
  }
  s.emit(out);
  return s.status();
}

struct ModelArgs {
  std::string family;
  std::string spec;
  unsigned k = 2, n = 3, window = 8, m = 2;
  std::string mode = "truncated";
  bool u_bottom = false;
  std::vector<std::string> factors;

  std::string to_spec() const {
    if (!spec.empty()) {
      if (!family.empty()) throw UsageError("give either a family or --spec, not both");
      return spec;
    }
    if (family == "boolean") return "boolean:" + std::to_string(k);
    if (family == "chain") return "chain:" + std::to_string(n) + ":" + mode;
    if (family == "z-u") return "z-u:" + std::to_string(window) + (u_bottom ? ":u-bottom" : "");
    if (family == "z-uv") return "z-uv:" + std::to_string(window);
    if (family == "closed-grid") return "closed-grid:" + std::to_string(m);
    if (family == "product") {
      if (factors.empty()) throw UsageError("product needs --factor specs");
      std::string out = "product:";
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + factors[i];
      return out;
    }
    throw UsageError("unknown model family '" + family +
                     "' (boolean, chain, z-u, z-uv, closed-grid, product)");
  }
};

int cmd_model(const Globals& g, const ModelArgs& a, std::ostream& out) {
  const ModelSpec spec = parse_model_spec(a.to_spec());
  const Algebra alg = build_model(spec);
  std::string comment = "model " + to_string(spec) + "\nelements:";
  const auto labels = element_labels(spec);
  for (std::size_t i = 0; i < labels.size(); ++i)
    comment += " " + std::to_string(i) + "=" + labels[i];
  const std::string text = format_algebra(alg, comment);
  if (g.json) {
    Session s(g, "model " + to_string(spec));
    s.value("algebra", text);
    s.emit(out);
  } else {
    out << text;
  }
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model verification and search for autometrized lattice-ordered monoids",
               "almg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable report");
  app.add_option("--threads", g.threads, "Worker thread cap (default: hardware)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--witness-cap", g.witness_cap, "Witnesses kept per check")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));

  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Classify an algebra and run the structural checks");
  AlgebraSource check_src;
  check_src.add_to(check);
  std::vector<std::string> only;
  bool drl = false, distrib = false;
  check->add_option("--only", only, "Checks that decide the exit status")->delimiter(',');
  check->add_flag("--drl", drl, "Also test the least-difference metric");
  check->add_flag("--distributivity", distrib, "Require + to distribute over join and meet");
  check->callback([&] { action = [&] { return cmd_check(g, check_src, only, drl, distrib, out); }; });

  auto* geo = app.add_subcommand("geometry", "Theorem suite, or one predicate with --predicate");
  AlgebraSource geo_src;
  geo_src.add_to(geo);
  std::vector<std::string> predicate;
  geo->add_option("--predicate", predicate, "NAME [elements...]")->expected(1, -1);
  geo->callback([&] { action = [&] { return cmd_geometry(g, geo_src, predicate, out); }; });

  SearchSpec spec;
  std::vector<std::string> require, violate;
  bool no_dedup = false, first = false, suite = false;
  std::string out_dir;

  auto* en = app.add_subcommand("enumerate", "All AL-monoids of one carrier size");
  en->add_option("--size", spec.size, "Carrier size")->required()->check(CLI::Range(1, 5));
  en->add_option("--budget", spec.budget, "Node expansion cap");
  en->add_flag("--no-dedup", no_dedup, "Keep isomorphic copies");
  en->add_flag("--suite", suite, "Run the theorem suite on every emitted algebra");
  en->add_option("--out", out_dir, "Write algebra files and summary.json here");
  en->callback([&] {
    action = [&] {
      spec.require = {Axiom::lattice, Axiom::monoid, Axiom::metric, Axiom::contractions,
                      Axiom::axiom2, Axiom::axiom4};
      spec.dedup = !no_dedup;
      return run_search(g, spec, "enumerate size " + std::to_string(spec.size), out_dir, suite,
                        out);
    };
  });

  auto* se = app.add_subcommand("search", "Algebras meeting --require and failing --violate");
  se->add_option("--size", spec.size, "Carrier size")->required()->check(CLI::Range(1, 5));
  se->add_option("--require", require, "Axioms that must hold")->delimiter(',');
  se->add_option("--violate", violate, "Axioms that must fail")->delimiter(',');
  se->add_option("--budget", spec.budget, "Node expansion cap");
  se->add_flag("--no-dedup", no_dedup, "Keep isomorphic copies");
  se->add_flag("--first", first, "Stop at the first witness");
  se->add_option("--out", out_dir, "Write algebra files and summary.json here");
  se->callback([&] {
    action = [&] {
      spec.require = parse_axioms(require);
      spec.violate = parse_axioms(violate);
      spec.dedup = !no_dedup;
      spec.first_only = first;
      std::string label = "search size " + std::to_string(spec.size) + " require";
      for (auto& r : require) label += " " + r;
      label += " violate";
      for (auto& v : violate) label += " " + v;
      return run_search(g, spec, label, out_dir, false, out);
    };
  });

  auto* iv = app.add_subcommand("intervals", "Closed-interval demos and operations");
  // Separate scalar positionals: a vector option would read `[0,2]` as a
  // bracketed list.
  std::array<std::string, 4> iv_args;
  iv->add_option("demo", iv_args[0], "ex | fixty | eval A union|meet|star B | axiom2 A B");
  for (int i = 1; i < 4; ++i) iv->add_option("arg" + std::to_string(i), iv_args[i]);
  iv->callback([&] {
    action = [&] {
      std::vector<std::string> args;
      for (const auto& a : iv_args)
        if (!a.empty()) args.push_back(a);
      return cmd_intervals(g, args, out);
    };
  });

  auto* model = app.add_subcommand("model", "Print a model in the algebra file format");
  ModelArgs margs;
  model->add_option("family", margs.family, "boolean | chain | z-u | z-uv | closed-grid | product");
  model->add_option("--spec", margs.spec, "Full spec, e.g. product:boolean:2,chain:2");
  model->add_option("--k", margs.k, "boolean: generator count");
  model->add_option("--n", margs.n, "chain: length");
  model->add_option("--mode", margs.mode, "chain: truncated | max");
  model->add_option("--window", margs.window, "z-u, z-uv: window radius N");
  model->add_flag("--u-bottom", margs.u_bottom, "z-u: place u below every integer");
  model->add_option("--m", margs.m, "closed-grid: grid length");
  model->add_option("--factor", margs.factors, "product: factor spec (repeatable)");
  model->callback([&] { action = [&] { return cmd_model(g, margs, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  set_thread_count(g.threads ? g.threads : std::max(1u, std::thread::hardware_concurrency()));
  try {
    return action();
  } catch (const ParseError& e) {
    err << "almg: parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "almg: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "almg: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "almg: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "almg: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "almg: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "almg: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace almg
