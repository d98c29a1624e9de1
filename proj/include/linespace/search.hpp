#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linespace/hypergraph.hpp"
#include "linespace/rational.hpp"

namespace linespace {

enum class Quantity { Lines, ClosureLines };

std::string_view quantity_name(Quantity q);  // "m" / "mbar"

struct BoundCheck {
  std::string name;
  std::int64_t bound = 0;
  std::int64_t value = 0;
  bool satisfied = false;
};

int ceil_lg(std::int64_t n);

/// Smallest m with C(m, floor(m/2)) >= n.
int sperner_lower_bound(std::int64_t n);

/// ceil(n(n-1) / (k(k-1))).
std::int64_t pair_cover_bound(std::int64_t n, std::int64_t k);

/// The lower bounds that apply to a family of `count` (closure-)lines on n
/// vertices whose members have at most k vertices. The logarithmic and
/// antichain bounds apply to lines only, and only when k <= n-1.
std::vector<BoundCheck> lower_bound_checks(int n, int k, std::int64_t count, Quantity q);

/// Checks the line family and the closure-line family of `h` against every
/// applicable bound. A family whose largest member exceeds k is skipped;
/// Errc::BadParams if neither family fits. Errc::BoundViolated on failure.
std::vector<BoundCheck> verify_bounds(const Hypergraph& h, int k);

/// Exhaustive search refuses n above this. LINESPACE_MAX_N overrides the
/// default of 6; values above 7 are clamped (2^35 hypergraphs already).
int exhaustive_limit();

struct SearchOptions {
  int threads = 1;
  int shards = 1;
  /// Evaluate only hypergraphs whose triple mask is minimal in its orbit
  /// under vertex relabeling. Never changes value or witness.
  bool canonical_pruning = false;
  int max_n = -1;  // -1: exhaustive_limit()
};

struct SearchReport {
  Quantity quantity = Quantity::Lines;
  int n = 0;
  int k = 0;
  std::optional<std::int64_t> value;  // empty when truncated
  std::int64_t best_found = 0;        // upper bound from the best witness
  bool truncated = false;
  Hypergraph witness;
  std::uint64_t witness_mask = 0;
  std::uint64_t instances_scanned = 0;
  std::uint64_t instances_evaluated = 0;  // after canonical pruning
  std::uint64_t instances_within_k = 0;
  std::uint64_t antichain_checks = 0;
  std::uint64_t instance_bound_checks = 0;
  std::vector<BoundCheck> bound_checks;
};

/// Triples of {0..n-1} in lexicographic order: bit i of a hypergraph mask
/// selects triples[i].
std::vector<VertexSet> lexicographic_triples(int n);
Hypergraph hypergraph_from_mask(int n, std::uint64_t mask);

/// OpenMP kernel over 2^C(n,3) labeled 3-uniform hypergraphs, sharded by the
/// membership of the first triples. Every visited instance is checked against
/// the lower bounds (and the antichain property in line mode); a violation
/// throws Errc::BoundViolated. Errc::TooLarge above the exhaustive limit.
SearchReport exhaustive_m(int n, int k, Quantity q, const SearchOptions& options = {});

/// Serial reference: builds each hypergraph and evaluates it through the
/// public line/closure API. Slow; kept to cross-check the kernel.
SearchReport exhaustive_m_reference(int n, int k, Quantity q);

/// Random 3-uniform hypergraphs; reports the best found as an upper bound
/// and always marks the report truncated.
SearchReport sampled_m(int n, int k, Quantity q, std::uint64_t samples, std::uint64_t seed);

enum class ScanSource { Graphs, Matrices };

struct ScanCounterexample {
  int n = 0;
  std::uint64_t encoding = 0;  // upper-triangle bits: adjacency or "distance is 2"
  std::vector<std::vector<std::int64_t>> dist;
  std::size_t line_count = 0;
};

struct ScanLevel {
  int n = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t instances = 0;  // connected graphs, or all matrices
  std::uint64_t with_universal_line = 0;
  std::uint64_t min_lines_without_universal = 0;  // 0 if every instance had one
  std::uint64_t sylvester_gallai_universal = 0;
  std::uint64_t sylvester_gallai_two_point = 0;
  friend bool operator==(const ScanLevel&, const ScanLevel&) = default;
};

struct ScanReport {
  ScanSource source = ScanSource::Graphs;
  int max_n = 0;
  std::vector<ScanLevel> levels;
  std::vector<ScanCounterexample> counterexamples;  // sorted by (n, encoding)
  std::vector<ScanCounterexample> sylvester_gallai_failures;
};

struct ScanOptions {
  int threads = 1;
};

/// Runs the de Bruijn-Erdos and Sylvester-Gallai checks on every connected
/// graph metric on 2..max_n vertices (Graphs, max_n <= 7) or every
/// {1,2}-valued distance matrix (Matrices, max_n <= 5).
ScanReport conjecture_scan(ScanSource source, int max_n, const ScanOptions& options = {});

/// Serial reference through MetricSpace / all_lines / check_sylvester_gallai.
ScanReport conjecture_scan_reference(ScanSource source, int max_n);

}  // namespace linespace
