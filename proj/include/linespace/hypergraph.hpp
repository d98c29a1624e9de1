#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linespace/line_family.hpp"
#include "linespace/metric.hpp"
#include "linespace/vertex_set.hpp"

namespace linespace {

/// Vertices 0..n-1 with a sorted, deduplicated edge list. Edges have at
/// least two vertices; edges of size two are accepted but never add
/// anything to a line.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {});

  int size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  bool is_three_uniform() const noexcept;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
};

/// (X, H(rho)) for a metric space.
Hypergraph associated_hypergraph(const MetricSpace& space);

VertexSet line_hg(const Hypergraph& h, int u, int v);

Hypergraph reduce_to_3uniform(const Hypergraph& h);

struct LineReport {
  LineFamily family;
  int max_line_size = 0;
  bool has_universal_line = false;
  std::size_t count = 0;
};

LineReport make_line_report(LineFamily family);
LineReport all_lines_hg(const Hypergraph& h);

struct DeBruijnErdosCheck {
  int n = 0;
  bool has_universal_line = false;
  std::size_t count = 0;
  bool satisfies = false;
  LineFamily family;
};

DeBruijnErdosCheck check_debruijn_erdos(const Hypergraph& h);
DeBruijnErdosCheck check_debruijn_erdos(const MetricSpace& space);

}  // namespace linespace
