#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linespace/cli.hpp"
#include "linespace/io.hpp"

using namespace linespace;
using io::Json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "linespace_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("construct fano then lines") {
  const auto fano = scratch("fano.json");
  const Run c = run({"construct", "fano", "--out", fano.string()});
  CHECK(c.code == 0);
  CHECK(std::filesystem::exists(fano.string() + ".manifest.json"));
  const Json manifest = io::read_file(fano.string() + ".manifest.json");
  CHECK(manifest["subcommand"] == "construct");
  CHECK(manifest["tool_version"] == kToolVersion);

  const Run l = run({"lines", "--input", fano.string(), "--kind", "hypergraph"});
  CHECK(l.code == 0);
  CHECK(l.json()["count"] == 7);
}

TEST_CASE("pentagon lines") {
  const auto pent = scratch("pentagon.json");
  REQUIRE(run({"construct", "pentagon", "--out", pent.string()}).code == 0);
  const Run l = run({"lines", "--input", pent.string(), "--kind", "metric"});
  REQUIRE(l.code == 0);
  CHECK(l.json()["count"] == 10);
  CHECK_FALSE(l.json()["has_universal_line"].get<bool>());
}

TEST_CASE("search exit codes") {
  const Run ex = run({"search", "--quantity", "m", "--n", "4", "--k", "3"});
  CHECK(ex.code == exit_code::kCompleted);
  CHECK(ex.json()["value"] == 4);
  const Run sm = run({"search", "--quantity", "mbar", "--n", "7", "--k", "3", "--mode", "sampled", "--samples", "100"});
  CHECK(sm.code == exit_code::kTruncated);
  CHECK(sm.json()["truncated"] == true);
}

TEST_CASE("metrizability report") {
  const auto fano = scratch("fano2.json");
  REQUIRE(run({"construct", "fano", "--out", fano.string()}).code == 0);
  const Run m = run({"check", "metrizable", "--input", fano.string()});
  CHECK(m.code == 0);
  CHECK(m.json()["metrizable"] == false);

  const auto single = scratch("single.json");
  write(single, R"({"n": 3, "edges": [[0, 1, 2]]})");
  const Run s = run({"check", "metrizable", "--input", single.string()});
  REQUIRE(s.code == 0);
  const Json j = s.json();
  CHECK(j["metrizable"] == true);
  CHECK(j["witness"]["dist"][0][1].is_string());
}

TEST_CASE("conjecture check and bounds") {
  const auto pent = scratch("pentagon2.json");
  REQUIRE(run({"construct", "pentagon", "--out", pent.string()}).code == 0);
  const Run c = run({"check", "conjecture", "--input", pent.string(), "--kind", "metric"});
  CHECK(c.code == 0);
  CHECK(c.json()["debruijn_erdos"]["satisfies"] == true);

  const auto fano = scratch("fano3.json");
  REQUIRE(run({"construct", "fano", "--out", fano.string()}).code == 0);
  const Run b = run({"verify-bounds", "--input", fano.string()});
  CHECK(b.code == 0);
  for (const Json& check : b.json()["bound_checks"]) CHECK(check["satisfied"] == true);
}

TEST_CASE("scan reports") {
  const Run s = run({"scan", "--source", "graphs", "--max-n", "4"});
  CHECK(s.code == 0);
  CHECK(s.json()["counterexamples"].empty());
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == exit_code::kUsage);
  CHECK(run({"frobnicate"}).code == exit_code::kUsage);
  CHECK(run({"construct", "lemma2", "--n", "6"}).code == exit_code::kUsage);
  const Run missing = run({"lines", "--input", scratch("missing.json").string()});
  CHECK(missing.code == exit_code::kUsage);

  const auto bad = scratch("bad.json");
  write(bad, R"({"labels": ["a", "b"], "dist": [[0, 1], [1, "x"]]})");
  const Run r = run({"lines", "--input", bad.string(), "--kind", "metric"});
  CHECK(r.code == exit_code::kUsage);
  CHECK(r.err.find("dist[1][1]") != std::string::npos);

  const auto bad_edge = scratch("bad_edge.json");
  write(bad_edge, R"({"n": 3, "edges": [[0, 1, 2], [0, 7]]})");
  const Run e = run({"lines", "--input", bad_edge.string()});
  CHECK(e.code == exit_code::kUsage);
  CHECK(e.err.find("edges[1]") != std::string::npos);

  const Run v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(kToolVersion) != std::string::npos);
}
