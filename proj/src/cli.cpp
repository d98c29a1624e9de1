#include "linespace/cli.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "linespace/closure.hpp"
#include "linespace/constructions.hpp"
#include "linespace/io.hpp"
#include "linespace/metrizability.hpp"
#include "linespace/search.hpp"

namespace linespace {

namespace {

using io::Json;

struct Settings {
  std::string input;
  std::string kind = "hypergraph";
  std::string out;
  std::string manifest;
  std::string construct_kind;
  int n = 0;
  int k = 0;
  int ell = 0;
  int alphabet = 0;
  std::string quantity = "m";
  std::string mode = "exhaustive";
  int shards = 1;
  int threads = 1;
  bool canonical = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string source = "graphs";
  int max_n = 7;
  int limit_edges = 12;
  bool reference = false;
  std::string archive = "linespace_findings.json";
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Settings s;
  std::string subcommand;
  Json parameters = Json::object();

  void emit(const Json& report) {
    if (s.out.empty()) out_ << report.dump(2) << '\n';
    else io::write_file(s.out, report);
  }

  void write_manifest(double seconds, int code) {
    Json m;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["input"] = s.input.empty() ? Json(nullptr) : Json(s.input);
    m["output"] = s.out.empty() ? Json("-") : Json(s.out);
    m["deterministic"] = true;
    m["tool_version"] = kToolVersion;
    m["format_version"] = io::kFormatVersion;
    m["exit_code"] = code;
    m["started_at"] = started_at_;
    m["wall_clock_seconds"] = seconds;
    if (!s.manifest.empty()) io::write_file(s.manifest, m);
    else if (!s.out.empty()) io::write_file(s.out + ".manifest.json", m);
    else err_ << m.dump() << '\n';
  }

  void start() { started_at_ = utc_now(); }

  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::string started_at_;
};

bool metric_kind(const std::string& kind) {
  if (kind == "metric") return true;
  if (kind == "hypergraph") return false;
  throw Error(Errc::BadInput, "--kind must be hypergraph or metric, got " + kind);
}

Hypergraph load_hypergraph(const Settings& s) {
  const Json j = io::read_file(s.input);
  return metric_kind(s.kind) ? associated_hypergraph(io::metric_from_json(j)) : io::hypergraph_from_json(j);
}

Json construct(const Settings& s, Json& params) {
  const std::string& kind = s.construct_kind;
  Json obj;
  Json check;
  auto require = [&](int value, const char* flag) {
    if (value <= 0) throw Error(Errc::BadParams, kind + " needs " + flag);
    params[std::string(flag).substr(2)] = value;
    return value;
  };
  auto hypergraph_checks = [&](const Hypergraph& h) {
    const LineReport lr = all_lines_hg(h);
    const LineFamily cl = all_closure_lines(h);
    check["lines"] = lr.count;
    check["max_line_size"] = lr.max_line_size;
    check["has_universal_line"] = lr.has_universal_line;
    check["closure_lines"] = cl.count();
    check["max_closure_line_size"] = cl.max_line_size();
  };
  if (kind == "pentagon") {
    const MetricSpace p = pentagon();
    obj = io::to_json(p);
    check["line_vy"] = io::vertex_list(line(p, 1, 3));
    check["line_xy"] = io::vertex_list(line(p, 2, 3));
    check["lines"] = all_lines(p).count();
  } else if (kind == "fano") {
    const Hypergraph f = fano();
    obj = io::to_json(f);
    hypergraph_checks(f);
  } else if (kind == "lemma2" || kind == "thm3auto") {
    int ell = 0, a = 0;
    const int n = require(s.n, "--n");
    if (kind == "lemma2") {
      ell = require(s.ell, "--ell");
      a = require(s.alphabet, "--a");
    } else {
      const Thm3Params tp = thm3_params(n);
      ell = tp.ell;
      a = static_cast<int>(tp.alphabet);
      check["ell"] = ell;
      check["a"] = a;
    }
    const Hypergraph h = lemma2_construction(n, ell, a);
    obj = io::to_json(h);
    hypergraph_checks(h);
    check["bound_2^ell+ell*a"] = lemma2_bound(ell, a);
  } else if (kind == "thm5") {
    const MetricSpace m = thm5_space(require(s.n, "--n"));
    obj = io::to_json(m);
    const LineFamily cl = all_closure_lines(m);
    check["closure_lines"] = cl.count();
    check["max_closure_line_size"] = cl.max_line_size();
    check["lines"] = all_lines(m).count();
    check["sylvester_gallai"] = io::sylvester_gallai_json(check_sylvester_gallai(m));
  } else if (kind == "packing") {
    const int n = require(s.n, "--n");
    const int k = require(s.k, "--k");
    const Hypergraph h = greedy_packing(n, k);
    obj = io::to_json(h);
    hypergraph_checks(h);
    check["edges"] = h.edges().size();
    check["formula_line_count"] = packing_line_count(n, k, static_cast<std::int64_t>(h.edges().size()));
  } else if (kind == "sandwich") {
    const int n = require(s.n, "--n");
    const int k = require(s.k, "--k");
    SandwichLayout layout;
    const Hypergraph h = sandwich_construction(n, k, &layout);
    obj = io::to_json(h);
    hypergraph_checks(h);
    check["p"] = layout.p;
    Json parts = Json::array();
    for (VertexSet part : layout.parts) parts.push_back(part.size());
    check["part_sizes"] = parts;
    check["core_closure_lines"] = layout.core_closure_lines.size();
    check["bound_12n^2/k^2"] = 12.0 * n * n / (static_cast<double>(k) * k);
    check["recursion_bound_(12/9+10)(n/k)^2"] = (12.0 / 9.0 + 10.0) * n * n / (static_cast<double>(k) * k);
  } else {
    throw Error(Errc::BadInput, "unknown construction \"" + kind + "\" (pentagon, fano, lemma2, thm3auto, thm5, packing, sandwich)");
  }
  check["passed"] = true;
  Json out = obj;
  out["construction"] = kind;
  out["self_check"] = check;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner run(out, err);
  Settings& s = run.s;
  CLI::App app{"linespace: lines and closure-lines in finite metric spaces and hypergraphs"};
  app.set_version_flag("--version", std::string("linespace ") + kToolVersion + " (format " + io::kFormatVersion + ")");
  app.require_subcommand(1);
  std::function<int()> action;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", s.out, "write the report here instead of stdout");
    c->add_option("--manifest", s.manifest, "run manifest path (default <out>.manifest.json, or stderr)");
  };
  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", s.input, "hypergraph or metric-space JSON")->required();
    c->add_option("--kind", s.kind, "hypergraph|metric")->check(CLI::IsMember({"hypergraph", "metric"}));
  };

  auto* lines_cmd = app.add_subcommand("lines", "distinct lines of a hypergraph or metric space");
  add_input(lines_cmd);
  add_output(lines_cmd);
  lines_cmd->callback([&] {
    action = [&] {
      run.parameters["kind"] = s.kind;
      const Json j = io::read_file(s.input);
      const LineReport r = metric_kind(s.kind) ? make_line_report(all_lines(io::metric_from_json(j)))
                                               : all_lines_hg(io::hypergraph_from_json(j));
      run.emit(io::line_report_json(r, "lines"));
      return exit_code::kCompleted;
    };
  });

  auto* closure_cmd = app.add_subcommand("closure-lines", "distinct closure-lines aff({u,v})");
  add_input(closure_cmd);
  add_output(closure_cmd);
  closure_cmd->callback([&] {
    action = [&] {
      run.parameters["kind"] = s.kind;
      const Hypergraph h = load_hypergraph(s);
      Json report = io::line_report_json(make_line_report(all_closure_lines(h)), "closure-lines");
      if (auto w = find_sylvester_gallai_witness(h)) report["sylvester_gallai"] = io::sylvester_gallai_json(*w);
      else report["sylvester_gallai"] = nullptr;
      run.emit(report);
      return exit_code::kCompleted;
    };
  });

  auto* construct_cmd = app.add_subcommand("construct", "build a named construction and self-check it");
  construct_cmd->add_option("kind", s.construct_kind, "pentagon|fano|lemma2|thm3auto|thm5|packing|sandwich")->required();
  construct_cmd->add_option("--n", s.n);
  construct_cmd->add_option("--k", s.k);
  construct_cmd->add_option("--ell", s.ell);
  construct_cmd->add_option("--a", s.alphabet);
  add_output(construct_cmd);
  construct_cmd->callback([&] {
    action = [&] {
      run.parameters["construction"] = s.construct_kind;
      run.emit(construct(s, run.parameters));
      return exit_code::kCompleted;
    };
  });

  auto* search_cmd = app.add_subcommand("search", "compute m(n,k) or mbar(n,k)");
  search_cmd->add_option("--quantity", s.quantity)->check(CLI::IsMember({"m", "mbar"}))->required();
  search_cmd->add_option("--n", s.n)->required();
  search_cmd->add_option("--k", s.k, "default n-1");
  search_cmd->add_option("--mode", s.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  search_cmd->add_option("--shards", s.shards);
  search_cmd->add_option("--threads", s.threads);
  search_cmd->add_flag("--canonical", s.canonical, "evaluate orbit representatives only");
  search_cmd->add_option("--samples", s.samples, "sampled mode: hypergraphs to draw");
  search_cmd->add_option("--seed", s.seed, "sampled mode: RNG seed");
  add_output(search_cmd);
  search_cmd->callback([&] {
    action = [&] {
      const int k = s.k > 0 ? s.k : s.n - 1;
      const Quantity q = s.quantity == "m" ? Quantity::Lines : Quantity::ClosureLines;
      run.parameters["quantity"] = s.quantity;
      run.parameters["n"] = s.n;
      run.parameters["k"] = k;
      run.parameters["mode"] = s.mode;
      SearchReport r;
      if (s.mode == "exhaustive") {
        run.parameters["shards"] = s.shards;
        run.parameters["threads"] = s.threads;
        run.parameters["canonical"] = s.canonical;
        r = exhaustive_m(s.n, k, q, SearchOptions{s.threads, s.shards, s.canonical, -1});
      } else {
        run.parameters["samples"] = s.samples;
        run.parameters["seed"] = s.seed;
        r = sampled_m(s.n, k, q, s.samples, s.seed);
      }
      Json report = io::search_report_json(r);
      report["mode"] = s.mode;
      run.emit(report);
      return r.truncated ? exit_code::kTruncated : exit_code::kCompleted;
    };
  });

  auto* scan_cmd = app.add_subcommand("scan", "de Bruijn-Erdos instance scan over small metric spaces");
  scan_cmd->add_option("--source", s.source)->check(CLI::IsMember({"graphs", "matrices"}));
  scan_cmd->add_option("--max-n", s.max_n);
  scan_cmd->add_option("--threads", s.threads);
  scan_cmd->add_option("--archive", s.archive, "where findings are archived");
  add_output(scan_cmd);
  scan_cmd->callback([&] {
    action = [&] {
      run.parameters["source"] = s.source;
      run.parameters["max_n"] = s.max_n;
      run.parameters["threads"] = s.threads;
      const ScanSource src = s.source == "graphs" ? ScanSource::Graphs : ScanSource::Matrices;
      const ScanReport r = conjecture_scan(src, s.max_n, ScanOptions{s.threads});
      const Json report = io::scan_report_json(r);
      run.emit(report);
      if (!r.counterexamples.empty() || !r.sylvester_gallai_failures.empty()) {
        io::write_file(s.archive, report);
        run.err() << "finding archived to " << s.archive << '\n';
        return exit_code::kFinding;
      }
      return exit_code::kCompleted;
    };
  });

  auto* check_cmd = app.add_subcommand("check", "decision procedures");
  check_cmd->require_subcommand(1);
  auto* metrizable_cmd = check_cmd->add_subcommand("metrizable", "is a 3-uniform hypergraph H(rho) for some metric?");
  metrizable_cmd->add_option("--input", s.input)->required();
  metrizable_cmd->add_option("--limit-edges", s.limit_edges);
  metrizable_cmd->add_option("--threads", s.threads);
  metrizable_cmd->add_flag("--reference", s.reference, "unpruned enumeration of all 3^|H| assignments");
  add_output(metrizable_cmd);
  metrizable_cmd->callback([&] {
    action = [&] {
      run.parameters["limit_edges"] = s.limit_edges;
      run.parameters["threads"] = s.threads;
      run.parameters["reference"] = s.reference;
      const Hypergraph h = io::hypergraph_from_json(io::read_file(s.input));
      const MetrizabilityResult r = s.reference ? check_metrizable_reference(h, s.limit_edges)
                                                : check_metrizable(h, MetrizabilityOptions{s.limit_edges, s.threads});
      run.emit(io::metrizability_json(r));
      return exit_code::kCompleted;
    };
  });
  auto* conjecture_cmd = check_cmd->add_subcommand("conjecture", "at least n lines or a universal line?");
  add_input(conjecture_cmd);
  conjecture_cmd->add_option("--archive", s.archive);
  add_output(conjecture_cmd);
  conjecture_cmd->callback([&] {
    action = [&] {
      run.parameters["kind"] = s.kind;
      const Json j = io::read_file(s.input);
      Json report;
      DeBruijnErdosCheck c;
      if (metric_kind(s.kind)) {
        const MetricSpace m = io::metric_from_json(j);
        c = check_debruijn_erdos(m);
        report["debruijn_erdos"] = io::debruijn_erdos_json(c);
        report["sylvester_gallai"] = io::sylvester_gallai_json(check_sylvester_gallai(m));
      } else {
        const Hypergraph h = io::hypergraph_from_json(j);
        c = check_debruijn_erdos(h);
        report["debruijn_erdos"] = io::debruijn_erdos_json(c);
        if (auto w = find_sylvester_gallai_witness(h)) report["sylvester_gallai"] = io::sylvester_gallai_json(*w);
        else report["sylvester_gallai"] = nullptr;
      }
      run.emit(report);
      if (!c.satisfies) {
        Json finding = report;
        finding["instance"] = j;
        io::write_file(s.archive, finding);
        run.err() << "finding archived to " << s.archive << '\n';
        return exit_code::kFinding;
      }
      return exit_code::kCompleted;
    };
  });

  auto* bounds_cmd = app.add_subcommand("verify-bounds", "check the lower bounds on one instance");
  add_input(bounds_cmd);
  bounds_cmd->add_option("--k", s.k, "default: largest line size");
  add_output(bounds_cmd);
  bounds_cmd->callback([&] {
    action = [&] {
      const Hypergraph h = load_hypergraph(s);
      const int k = s.k > 0 ? s.k : all_lines_hg(h).max_line_size;
      run.parameters["kind"] = s.kind;
      run.parameters["k"] = k;
      Json report;
      report["n"] = h.size();
      report["k"] = k;
      report["bound_checks"] = io::bound_checks_json(verify_bounds(h, k));
      run.emit(report);
      return exit_code::kCompleted;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kUsage;
  }
  for (const auto* sub : app.get_subcommands()) {
    run.subcommand = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) run.subcommand += " " + inner->get_name();
  }
  run.start();
  const auto t0 = std::chrono::steady_clock::now();
  int code = exit_code::kUsage;
  try {
    code = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = exit_code::kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    code = exit_code::kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    run.write_manifest(seconds, code);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return code;
}

}  // namespace linespace
