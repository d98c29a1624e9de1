#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linespace/hypergraph.hpp"
#include "linespace/metric.hpp"

namespace linespace {

/// middle[e] is the vertex of edges()[e] that lies between the other two.
using MiddleAssignment = std::vector<int>;

/// A linear form over the pair-distance variables with integer coefficients.
struct LinearRow {
  std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/// Homogeneous system in one variable per unordered pair {i<j}, plus the
/// normalization sum = 1. `nonstrict` is only populated for partial
/// assignments, where an unassigned edge keeps its triangle inequalities.
struct FeasibilitySystem {
  int vertices = 0;
  std::vector<std::pair<int, int>> pair_of_variable;
  std::vector<LinearRow> equalities;   // row = 0
  std::vector<LinearRow> strict;       // row > 0
  std::vector<LinearRow> positivity;   // d_p > 0
  std::vector<LinearRow> nonstrict;    // row >= 0
  LinearRow normalization;             // row = 1

  int variable_count() const noexcept { return static_cast<int>(pair_of_variable.size()); }
  int pair_variable(int i, int j) const;
};

/// Edges with a middle get one equality and two strict triangle rows;
/// non-edge triples get three strict rows; every distance is positive.
FeasibilitySystem build_system(const Hypergraph& h, const MiddleAssignment& assignment);

/// As build_system, with middles fixed only for the first assigned.size()
/// edges; the remaining edges contribute non-strict triangle rows.
FeasibilitySystem build_partial_system(const Hypergraph& h, std::span<const int> assigned);

struct StrictSolution {
  bool strictly_feasible = false;
  bool weakly_feasible = false;  // max slack is 0
  mpq_class slack = 0;
  std::vector<mpq_class> distances;  // sums to 1 when feasible
  std::size_t pivots = 0;
};

/// Maximizes epsilon with every strict and positivity row >= epsilon under
/// the normalization; strictly feasible iff the optimum is positive.
StrictSolution solve_strict(const FeasibilitySystem& system);

struct MetrizabilityOptions {
  int limit_edges = 12;
  int threads = 1;
};

struct MetrizabilityResult {
  bool metrizable = false;
  std::optional<MetricSpace> witness;
  std::optional<MiddleAssignment> assignment;
  std::uint64_t assignments_tried = 0;  // complete assignments solved
  std::uint64_t lp_solves = 0;
  std::uint64_t pruned_subtrees = 0;
  bool counts_approximate = false;  // set when threads > 1
};

/// Depth-first search over middle assignments in lexicographic order. A
/// partial assignment whose relaxed system has no strict solution prunes
/// its subtree. Errc::NotThreeUniform, Errc::TooLarge above limit_edges.
MetrizabilityResult check_metrizable(const Hypergraph& h, const MetrizabilityOptions& options = {});

/// Serial reference: every one of the 3^|H| complete assignments in
/// lexicographic order, no pruning.
MetrizabilityResult check_metrizable_reference(const Hypergraph& h, int limit_edges = 12);

/// Turns an LP solution into a metric space and confirms, exactly, that its
/// betweenness hypergraph is `h`. Errc::SelfCheckFailed otherwise.
MetricSpace witness_metric(const Hypergraph& h, const std::vector<mpq_class>& distances);

}  // namespace linespace
