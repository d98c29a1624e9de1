#include "linespace/hypergraph.hpp"

#include <algorithm>

namespace linespace {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) throw Error(Errc::TooLarge, "vertex count must be in 0..64, got " + std::to_string(n));
  if (labels_.empty()) {
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(Errc::BadInput, "labels: expected " + std::to_string(n) + " entries");
  }
  const VertexSet all = VertexSet::full(n);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!all.contains(edges_[e])) throw Error(Errc::BadInput, "edges[" + std::to_string(e) + "]: vertex out of range");
    if (edges_[e].size() < 2) throw Error(Errc::BadInput, "edges[" + std::to_string(e) + "]: fewer than 2 vertices");
  }
  std::sort(edges_.begin(), edges_.end(), element_order_less);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::is_three_uniform() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 3; });
}

Hypergraph associated_hypergraph(const MetricSpace& space) {
  return Hypergraph(space.size(), betweenness_set(space), space.labels());
}

VertexSet line_hg(const Hypergraph& h, int u, int v) {
  if (u == v) throw Error(Errc::SamePoint, "line needs two distinct vertices, got " + std::to_string(u) + " twice");
  const VertexSet uv = VertexSet::pair(u, v);
  VertexSet out = uv;
  for (VertexSet e : h.edges()) {
    if (e.contains(uv)) out |= e;
  }
  return out;
}

Hypergraph reduce_to_3uniform(const Hypergraph& h) {
  std::vector<VertexSet> triples;
  for (VertexSet e : h.edges()) {
    if (e.size() < 3) continue;
    const auto vs = e.to_vector();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        for (std::size_t c = b + 1; c < vs.size(); ++c)
          triples.push_back(VertexSet::single(vs[a]) | VertexSet::single(vs[b]) | VertexSet::single(vs[c]));
  }
  return Hypergraph(h.size(), std::move(triples), h.labels());
}

LineReport make_line_report(LineFamily family) {
  LineReport r;
  r.max_line_size = family.max_line_size();
  r.has_universal_line = family.has_universal_line();
  r.count = family.count();
  r.family = std::move(family);
  return r;
}

LineReport all_lines_hg(const Hypergraph& h) {
  std::vector<VertexSet> lines;
  for (int u = 0; u < h.size(); ++u)
    for (int v = u + 1; v < h.size(); ++v) lines.push_back(line_hg(h, u, v));
  return make_line_report(LineFamily(h.size(), std::move(lines)));
}

namespace {

DeBruijnErdosCheck de_check(LineFamily family) {
  DeBruijnErdosCheck c;
  c.n = family.ground_size();
  c.has_universal_line = family.has_universal_line();
  c.count = family.count();
  c.satisfies = c.has_universal_line || c.count >= static_cast<std::size_t>(c.n);
  c.family = std::move(family);
  return c;
}

}  // namespace

DeBruijnErdosCheck check_debruijn_erdos(const Hypergraph& h) { return de_check(all_lines_hg(h).family); }

DeBruijnErdosCheck check_debruijn_erdos(const MetricSpace& space) { return de_check(all_lines(space)); }

}  // namespace linespace
