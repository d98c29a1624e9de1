#include "linespace/closure.hpp"

namespace linespace {

bool is_affinely_closed(const Hypergraph& h, VertexSet t) {
  for (VertexSet e : h.edges()) {
    if ((e & t).size() >= 2 && !t.contains(e)) return false;
  }
  return true;
}

VertexSet affine_closure(const Hypergraph& h, VertexSet s) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size();) {
    if ((edges[i] & s).size() >= 2 && !s.contains(edges[i])) {
      s |= edges[i];
      i = 0;
    } else {
      ++i;
    }
  }
  return s;
}

LineFamily all_closure_lines(const Hypergraph& h) {
  std::vector<VertexSet> lines;
  for (int u = 0; u < h.size(); ++u)
    for (int v = u + 1; v < h.size(); ++v) lines.push_back(affine_closure(h, VertexSet::pair(u, v)));
  return LineFamily(h.size(), std::move(lines));
}

LineFamily all_closure_lines(const MetricSpace& space) { return all_closure_lines(associated_hypergraph(space)); }

std::optional<SylvesterGallaiWitness> find_sylvester_gallai_witness(const Hypergraph& h) {
  const int n = h.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const VertexSet c = affine_closure(h, VertexSet::pair(u, v));
      if (c.size() == n) return SylvesterGallaiWitness{c, u, v, WitnessKind::Universal};
      if (c.size() == 2) return SylvesterGallaiWitness{c, u, v, WitnessKind::TwoPoint};
    }
  }
  return std::nullopt;
}

SylvesterGallaiWitness check_sylvester_gallai(const MetricSpace& space) {
  if (space.size() < 2) throw Error(Errc::BadParams, "closure-lines need at least two points");
  auto w = find_sylvester_gallai_witness(associated_hypergraph(space));
  if (!w) {
    throw Error(Errc::TheoremViolated,
                "no closure-line is universal or two-point in a " + std::to_string(space.size()) + "-point metric space");
  }
  return *w;
}

}  // namespace linespace
