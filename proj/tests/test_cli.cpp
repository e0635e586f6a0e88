#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "almg/algebra_io.hpp"
#include "almg/cli.hpp"
#include "almg/models.hpp"
#include "almg/report.hpp"

using namespace almg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "almg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
  const fs::path p = ALMG_TEST_TMP;
  fs::create_directories(p);
  return p;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = tmp_dir() / name;
  std::ofstream(p) << text;
  return p;
}

json strip_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("check on model files") {
  const auto b2 = write_file("b2.alg", format_algebra(make_boolean(2)));
  CHECK(run({"check", b2.string()}).code == kExitPass);

  const auto zuv = write_file("zuv.alg", format_algebra(make_z_window_uv(8)));
  const auto r = run({"check", zuv.string()});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("[FAIL] axiom2") != std::string::npos);

  std::string text = format_algebra(make_boolean(2));
  text.replace(text.find("0 1 2 3\n"), 8, "0 1 2\n");
  const auto bad = write_file("short.alg", text);
  const auto p = run({"check", bad.string()});
  CHECK(p.code == kExitUsage);
  CHECK(p.err.find("line") != std::string::npos);

  CHECK(run({"check", (tmp_dir() / "missing.alg").string()}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
}

TEST_CASE("check selections") {
  CHECK(run({"check", "--model", "z-uv:8", "--only", "lattice,monoid,metric,contractions,axiom4"})
            .code == kExitPass);
  CHECK(run({"check", "--model", "z-uv:8", "--only", "axiom2"}).code == kExitFail);
  CHECK(run({"check", "--model", "boolean:2", "--drl"}).code == kExitPass);
  CHECK(run({"check", "--model", "z-u:4", "--drl"}).code == kExitFail);
  CHECK(run({"check", "--model", "boolean:2", "--only", "nonsense"}).code == kExitUsage);
  CHECK(run({"check", "--model", "wat:2"}).code == kExitUsage);
}

TEST_CASE("geometry predicates") {
  const auto b2 = write_file("b2g.alg", format_algebra(make_boolean(2)));
  const auto c3 = write_file("c3.alg", format_algebra(make_chain(3, ChainMode::truncated)));
  CHECK(run({"geometry", b2.string()}).code == kExitPass);
  const auto fx = run({"geometry", b2.string(), "--predicate", "fixty", "1", "2", "3"});
  CHECK(fx.code == kExitPass);
  CHECK(fx.out == "fixty: true\n");
  const auto m = run({"geometry", c3.string(), "--predicate", "M", "0", "2", "1"});
  CHECK(m.code == kExitFail);
  CHECK(m.out == "M: false\n");
  CHECK(run({"geometry", "--model", "chain:3:max", "--predicate", "t1"}).code == kExitFail);
  CHECK(run({"geometry", "--model", "boolean:2", "--predicate", "atoms"}).out == "atoms: [1,2]\n");
  CHECK(run({"geometry", "--model", "boolean:2", "--predicate", "fixty", "1", "2"}).code ==
        kExitUsage);
  CHECK(run({"geometry", "--model", "boolean:2", "--predicate", "fixty", "1", "2", "9"}).code ==
        kExitUsage);
  CHECK(run({"geometry", "--model", "boolean:2", "--predicate", "bogus"}).code == kExitUsage);
  CHECK(run({"geometry", "--model", "closed-grid:2"}).code == kExitPass);
}

TEST_CASE("enumerate and search") {
  const auto e = run({"--json", "enumerate", "--size", "2"});
  CHECK(e.code == kExitPass);
  const auto doc = ReportDocument::from_json(json::parse(e.out));
  REQUIRE(doc.entries.size() >= 2);
  CHECK(doc.entries[0].result.at("emitted").get<int>() >= 1);
  CHECK(doc.entries[1].name == "reverification");
  CHECK(doc.entries[1].result.at("passed").get<bool>());

  const fs::path out = tmp_dir() / "search3";
  fs::remove_all(out);
  const auto s = run({"search", "--size", "3", "--require", "axiom2", "--violate", "axiom4",
                      "--out", out.string()});
  CHECK(s.code == kExitPass);
  REQUIRE(fs::exists(out / "summary.json"));
  const json summary = json::parse(std::ifstream(out / "summary.json"));
  const auto emitted = summary.at("emitted").get<std::size_t>();
  CHECK(emitted == 165);
  REQUIRE(fs::exists(out / "algebra-0001.alg"));
  const Algebra first = read_algebra_file(out / "algebra-0001.alg");
  CHECK(check_axiom2(first).passed);
  CHECK_FALSE(check_axiom4(first).passed);

  CHECK(run({"search", "--size", "3", "--require", "axiom2", "--violate", "axiom2"}).code ==
        kExitUsage);
  CHECK(run({"search", "--size", "3", "--violate", "lattice"}).code == kExitUsage);
  CHECK(run({"search", "--size", "9"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
}

TEST_CASE("interval demos") {
  const auto ex = run({"intervals", "ex"});
  CHECK(ex.code == kExitPass);
  CHECK(ex.out.find("witness: [2,2]") != std::string::npos);
  const auto fx = run({"intervals", "fixty"});
  CHECK(fx.code == kExitPass);
  CHECK(fx.out.find("meet: [1,1]+[2,2]") != std::string::npos);
  const auto bogus = run({"intervals", "bogus"});
  CHECK(bogus.code == kExitUsage);
  CHECK(bogus.err.find("ex, fixty") != std::string::npos);
  CHECK(run({"intervals", "eval", "[0,2]", "star", "[1,3]"}).out ==
        "[0,2] star [1,3]: [0,1]+[2,3]\n");
  CHECK(run({"intervals", "axiom2", "[0,1]+[2,3]", "[1,2]"}).code == kExitPass);
  CHECK(run({"intervals", "eval", "[0,2", "star", "[1,3]"}).code == kExitUsage);
}

TEST_CASE("model output round-trips through check") {
  const std::vector<std::vector<std::string>> cases = {
      {"boolean", "--k", "2"},
      {"chain", "--n", "3", "--mode", "truncated"},
      {"chain", "--n", "5", "--mode", "max"},
      {"z-u", "--window", "4"},
      {"z-uv", "--window", "3"},
      {"closed-grid", "--m", "1"},
      {"product", "--factor", "boolean:1", "--factor", "chain:3"},
  };
  const std::vector<std::string> specs = {"boolean:2", "chain:3", "chain:5:max", "z-u:4",
                                          "z-uv:3",    "closed-grid:1", "product:boolean:1,chain:3"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::vector<std::string> args{"model"};
    args.insert(args.end(), cases[i].begin(), cases[i].end());
    const auto m = run(args);
    REQUIRE(m.code == kExitPass);
    const Algebra parsed = parse_algebra(m.out);
    CHECK(parsed == build_model(parse_model_spec(specs[i])));
    const auto f = write_file("model" + std::to_string(i) + ".alg", m.out);
    const auto c = run({"check", f.string()});
    const bool ok = specs[i] != "z-uv:3";
    CHECK(c.code == (ok ? kExitPass : kExitFail));
  }
  const auto zu = run({"model", "z-u", "--window", "4"});
  CHECK(zu.out.find('?') != std::string::npos);
  const auto f = write_file("zu4.alg", zu.out);
  const auto c = run({"--json", "check", f.string()});
  const json j = json::parse(c.out);
  CHECK(j["entries"][0]["result"]["reports"][0]["skipped"].get<int>() > 0);
  CHECK(run({"model", "boolean", "--k", "7"}).code == kExitUsage);
  CHECK(run({"model", "teapot"}).code == kExitUsage);
}

TEST_CASE("json output is stable across runs and thread caps") {
  const std::vector<std::vector<std::string>> commands = {
      {"check", "--model", "z-u:8"},
      {"geometry", "--model", "boolean:2"},
      {"enumerate", "--size", "3", "--suite"},
      {"search", "--size", "3", "--require", "axiom4", "--violate", "axiom2", "--budget", "20000"},
      {"intervals", "fixty"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> a{"--json", "--threads", "1"}, b{"--json", "--threads", "8"};
    a.insert(a.end(), cmd.begin(), cmd.end());
    b.insert(b.end(), cmd.begin(), cmd.end());
    const auto ra = run(a), rb = run(b), rc = run(a);
    CHECK(ra.code == rb.code);
    CHECK(strip_timing(ra.out) == strip_timing(rb.out));
    CHECK(strip_timing(ra.out).dump() == strip_timing(rc.out).dump());
  }
}

TEST_CASE("version and usage") {
  CHECK(run({"--version"}).code == kExitPass);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}
