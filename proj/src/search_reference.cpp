// Serial reference searches. Each instance is materialized and evaluated
// through the public module API; used to cross-check the kernels.

#include <algorithm>
#include <limits>

#include "linespace/closure.hpp"
#include "linespace/search.hpp"

namespace linespace {

SearchReport exhaustive_m_reference(int n, int k, Quantity q) {
  if (n < 2 || k < 2 || k > n) throw Error(Errc::BadParams, "reference search needs 2 <= k <= n");
  if (n > 6) throw Error(Errc::TooLarge, "reference search is limited to n <= 6");
  const auto triples = lexicographic_triples(n);
  SearchReport r;
  r.quantity = q;
  r.n = n;
  r.k = k;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
    const Hypergraph h = hypergraph_from_mask(n, mask);
    ++r.instances_scanned;
    ++r.instances_evaluated;
    const LineFamily fam = q == Quantity::Lines ? all_lines_hg(h).family : all_closure_lines(h);
    const auto count = static_cast<std::int64_t>(fam.count());
    for (const auto& c : lower_bound_checks(n, fam.max_line_size(), count, q)) {
      ++r.instance_bound_checks;
      if (!c.satisfied) throw Error(Errc::BoundViolated, c.name + " at mask " + std::to_string(mask));
    }
    if (q == Quantity::Lines && !fam.has_universal_line()) {
      ++r.antichain_checks;
      if (!lines_through_vertices_form_antichain(fam)) {
        throw Error(Errc::BoundViolated, "antichain at mask " + std::to_string(mask));
      }
    }
    if (fam.max_line_size() > k) continue;
    ++r.instances_within_k;
    if (count < best) {
      best = count;
      r.witness_mask = mask;
      r.witness = h;
    }
  }
  r.value = best;
  r.best_found = best;
  r.bound_checks = lower_bound_checks(n, k, best, q);
  return r;
}

ScanReport conjecture_scan_reference(ScanSource source, int max_n) {
  ScanReport report;
  report.source = source;
  report.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) {
    ScanLevel level;
    level.n = n;
    const int pair_count = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count); ++code) {
      ++level.enumerated;
      std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
      std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      int bit = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit) {
          const bool on = (code >> bit) & 1U;
          adj[a][b] = adj[b][a] = on;
          dist[a][b] = dist[b][a] = Rational(on ? 2 : 1);
        }
      std::optional<MetricSpace> space;
      if (source == ScanSource::Matrices) {
        space = validate_metric(dist);
      } else {
        try {
          space = graph_metric(adj);
        } catch (const Error& e) {
          if (e.code() != Errc::Disconnected) throw;
          continue;
        }
      }
      ++level.instances;
      const SylvesterGallaiWitness w = check_sylvester_gallai(*space);
      if (w.kind == WitnessKind::Universal) ++level.sylvester_gallai_universal;
      else ++level.sylvester_gallai_two_point;

      const DeBruijnErdosCheck check = check_debruijn_erdos(*space);
      if (check.has_universal_line) {
        ++level.with_universal_line;
        continue;
      }
      if (level.min_lines_without_universal == 0 || check.count < level.min_lines_without_universal) {
        level.min_lines_without_universal = check.count;
      }
      if (!check.satisfies) {
        ScanCounterexample c;
        c.n = n;
        c.encoding = code;
        c.line_count = check.count;
        for (int a = 0; a < n; ++a) {
          c.dist.emplace_back();
          for (int b = 0; b < n; ++b) c.dist.back().push_back(space->dist(a, b).num());
        }
        report.counterexamples.push_back(std::move(c));
      }
    }
    report.levels.push_back(level);
  }
  return report;
}

}  // namespace linespace
