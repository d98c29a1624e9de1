#pragma once

#include <optional>

#include "linespace/hypergraph.hpp"
#include "linespace/line_family.hpp"
#include "linespace/metric.hpp"

namespace linespace {

// An affinely closed set contains every edge that meets it in two or more
// vertices. aff(S) is the smallest such superset of S.

bool is_affinely_closed(const Hypergraph& h, VertexSet t);

/// Fixed point: absorb the first edge (in stored order) that meets the set
/// twice and escapes it, then rescan from the start.
VertexSet affine_closure(const Hypergraph& h, VertexSet s);

/// aff({u,v}) over every pair, deduplicated.
LineFamily all_closure_lines(const Hypergraph& h);
LineFamily all_closure_lines(const MetricSpace& space);

enum class WitnessKind { Universal, TwoPoint };

struct SylvesterGallaiWitness {
  VertexSet line;
  int u = 0;
  int v = 0;
  WitnessKind kind = WitnessKind::TwoPoint;
};

/// First pair (lexicographic) whose closure-line is universal or has two
/// points. For a metric space one must exist; Errc::TheoremViolated otherwise.
SylvesterGallaiWitness check_sylvester_gallai(const MetricSpace& space);

/// Same search on an arbitrary hypergraph, where no witness is guaranteed.
std::optional<SylvesterGallaiWitness> find_sylvester_gallai_witness(const Hypergraph& h);

}  // namespace linespace
