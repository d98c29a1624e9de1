#include "linespace/io.hpp"

#include <fstream>

namespace linespace::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(Errc::BadInput, field + ": " + why);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad("<root>", "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(key, "missing");
  return *it;
}

std::vector<std::string> labels_from(const Json& j) {
  std::vector<std::string> labels;
  const auto it = j.find("labels");
  if (it == j.end()) return labels;
  if (!it->is_array()) bad("labels", "expected an array of strings");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& l = (*it)[i];
    if (l.is_string()) labels.push_back(l.get<std::string>());
    else if (l.is_number_integer()) labels.push_back(std::to_string(l.get<std::int64_t>()));
    else bad("labels[" + std::to_string(i) + "]", "expected a string");
  }
  return labels;
}

Rational rational_from(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(field, e.what());
    }
  }
  bad(field, "expected an integer or a \"p/q\" string");
}

}  // namespace

MetricSpace metric_from_json(const Json& j) {
  const Json& dist = member(j, "dist");
  if (!dist.is_array()) bad("dist", "expected an array of rows");
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::string row_field = "dist[" + std::to_string(i) + "]";
    if (!dist[i].is_array()) bad(row_field, "expected an array");
    matrix.emplace_back();
    for (std::size_t k = 0; k < dist[i].size(); ++k) {
      matrix.back().push_back(rational_from(dist[i][k], row_field + "[" + std::to_string(k) + "]"));
    }
  }
  return validate_metric(matrix, labels_from(j));
}

Hypergraph hypergraph_from_json(const Json& j) {
  const Json& nj = member(j, "n");
  if (!nj.is_number_integer()) bad("n", "expected an integer");
  const auto n = nj.get<std::int64_t>();
  if (n < 0 || n > kMaxVertices) bad("n", "must be in 0..64");
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) bad("edges", "expected an array of vertex lists");
  std::vector<VertexSet> sets;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string field = "edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array()) bad(field, "expected an array of vertex indices");
    VertexSet s;
    for (std::size_t t = 0; t < edges[e].size(); ++t) {
      const Json& v = edges[e][t];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() >= n) {
        bad(field + "[" + std::to_string(t) + "]", "expected a vertex index in 0.." + std::to_string(n - 1));
      }
      s.insert(static_cast<int>(v.get<std::int64_t>()));
    }
    if (s.size() < 2) bad(field, "an edge needs at least 2 distinct vertices");
    sets.push_back(s);
  }
  auto labels = labels_from(j);
  if (!labels.empty() && static_cast<std::int64_t>(labels.size()) != n) bad("labels", "expected n entries");
  return Hypergraph(static_cast<int>(n), std::move(sets), std::move(labels));
}

Json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  s.for_each([&](int v) { out.push_back(v); });
  return out;
}

Json to_json(const MetricSpace& space) {
  Json j;
  j["labels"] = space.labels();
  Json dist = Json::array();
  for (int i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(to_json(space.dist(i, k)));
    dist.push_back(std::move(row));
  }
  j["dist"] = std::move(dist);
  return j;
}

Json to_json(const Hypergraph& h) {
  Json j;
  j["n"] = h.size();
  j["labels"] = h.labels();
  Json edges = Json::array();
  for (VertexSet e : h.edges()) edges.push_back(vertex_list(e));
  j["edges"] = std::move(edges);
  return j;
}

Json family_json(const LineFamily& family) {
  Json out = Json::array();
  for (VertexSet l : family.lines()) out.push_back(vertex_list(l));
  return out;
}

Json line_report_json(const LineReport& report, std::string_view kind) {
  Json j;
  j["report"] = kind;
  j["n"] = report.family.ground_size();
  j["count"] = report.count;
  j["max_line_size"] = report.max_line_size;
  j["has_universal_line"] = report.has_universal_line;
  j["lines"] = family_json(report.family);
  return j;
}

Json debruijn_erdos_json(const DeBruijnErdosCheck& check) {
  Json j;
  j["n"] = check.n;
  j["count"] = check.count;
  j["has_universal_line"] = check.has_universal_line;
  j["satisfies"] = check.satisfies;
  j["lines"] = family_json(check.family);
  return j;
}

Json sylvester_gallai_json(const SylvesterGallaiWitness& w) {
  Json j;
  j["kind"] = w.kind == WitnessKind::Universal ? "universal" : "two-point";
  j["pair"] = Json::array({w.u, w.v});
  j["closure_line"] = vertex_list(w.line);
  return j;
}

Json bound_checks_json(const std::vector<BoundCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["bound"] = c.bound;
    j["value"] = c.value;
    j["satisfied"] = c.satisfied;
    out.push_back(std::move(j));
  }
  return out;
}

Json search_report_json(const SearchReport& r) {
  Json j;
  j["quantity"] = quantity_name(r.quantity);
  j["n"] = r.n;
  j["k"] = r.k;
  j["truncated"] = r.truncated;
  if (r.value) j["value"] = *r.value;
  else j["value"] = nullptr;
  if (r.best_found >= 0) j["best_found"] = r.best_found;
  else j["best_found"] = nullptr;
  j["witness"] = to_json(r.witness);
  j["witness_mask"] = r.witness_mask;
  j["instances_scanned"] = r.instances_scanned;
  j["instances_evaluated"] = r.instances_evaluated;
  j["instances_within_k"] = r.instances_within_k;
  j["antichain_checks"] = r.antichain_checks;
  j["instance_bound_checks"] = r.instance_bound_checks;
  j["bound_checks"] = bound_checks_json(r.bound_checks);
  return j;
}

namespace {

Json counterexample_json(const ScanCounterexample& c) {
  Json j;
  j["n"] = c.n;
  j["encoding"] = c.encoding;
  j["line_count"] = c.line_count;
  j["dist"] = c.dist;
  return j;
}

}  // namespace

Json scan_report_json(const ScanReport& r) {
  Json j;
  j["source"] = r.source == ScanSource::Graphs ? "graphs" : "matrices";
  j["max_n"] = r.max_n;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json lj;
    lj["n"] = l.n;
    lj["enumerated"] = l.enumerated;
    lj["instances"] = l.instances;
    lj["with_universal_line"] = l.with_universal_line;
    lj["without_universal_line"] = l.instances - l.with_universal_line;
    if (l.min_lines_without_universal) lj["min_lines_without_universal"] = l.min_lines_without_universal;
    else lj["min_lines_without_universal"] = nullptr;
    lj["sylvester_gallai_universal"] = l.sylvester_gallai_universal;
    lj["sylvester_gallai_two_point"] = l.sylvester_gallai_two_point;
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(counterexample_json(c));
  j["counterexamples"] = std::move(ce);
  Json sg = Json::array();
  for (const auto& c : r.sylvester_gallai_failures) sg.push_back(counterexample_json(c));
  j["sylvester_gallai_failures"] = std::move(sg);
  return j;
}

Json metrizability_json(const MetrizabilityResult& r) {
  Json j;
  j["metrizable"] = r.metrizable;
  j["assignments_tried"] = r.assignments_tried;
  j["lp_solves"] = r.lp_solves;
  j["pruned_subtrees"] = r.pruned_subtrees;
  j["counts_approximate"] = r.counts_approximate;
  if (r.assignment) j["middles"] = *r.assignment;
  else j["middles"] = nullptr;
  if (r.witness) {
    Json w;
    w["labels"] = r.witness->labels();
    Json dist = Json::array();
    for (int a = 0; a < r.witness->size(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < r.witness->size(); ++b) {
        const Rational& d = r.witness->dist(a, b);
        row.push_back(std::to_string(d.num()) + "/" + std::to_string(d.den()));
      }
      dist.push_back(std::move(row));
    }
    w["dist"] = std::move(dist);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::BadInput, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace linespace::io
