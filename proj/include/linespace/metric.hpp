#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linespace/line_family.hpp"
#include "linespace/rational.hpp"
#include "linespace/vertex_set.hpp"

namespace linespace {

/// A finite metric space with exact rational distances. Only
/// validate_metric() builds one, so every instance satisfies the axioms.
class MetricSpace {
 public:
  int size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Rational& dist(int i, int j) const { return dist_[static_cast<std::size_t>(i * n_ + j)]; }

  friend MetricSpace validate_metric(const std::vector<std::vector<Rational>>& matrix,
                                     std::vector<std::string> labels);
  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
};

/// b is the middle point: dist(a,b) + dist(b,c) = dist(a,c).
struct BetweennessTriple {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const BetweennessTriple&, const BetweennessTriple&) = default;
};

/// Checks squareness and the metric axioms. Empty `labels` get "0".."n-1".
MetricSpace validate_metric(const std::vector<std::vector<Rational>>& matrix,
                            std::vector<std::string> labels = {});

/// The middle of {a,b,c} under metric betweenness, if any. Throws
/// TheoremViolated if two middles exist (impossible in a metric space).
std::optional<int> middle_of(const MetricSpace& space, int a, int b, int c);

/// Every betweenness triple, one per 3-set, ordered by (min, mid, max) of the
/// unordered set. The set {a,b,c} is an edge of H(rho).
std::vector<BetweennessTriple> betweenness_triples(const MetricSpace& space);

/// The 3-uniform edge family H(rho), sorted in element order.
std::vector<VertexSet> betweenness_set(const MetricSpace& space);

VertexSet line(const MetricSpace& space, int u, int v);

LineFamily all_lines(const MetricSpace& space);

/// Shortest-path metric of a connected simple graph.
MetricSpace graph_metric(const std::vector<std::vector<bool>>& adjacency,
                         std::vector<std::string> labels = {});

}  // namespace linespace
