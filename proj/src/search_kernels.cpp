// OpenMP kernels for the exhaustive searches. Hypergraphs and graphs are
// words of bits; the reference versions in search_reference.cpp go through
// the public API instead.

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linespace/constructions.hpp"
#include "linespace/search.hpp"

namespace linespace {

namespace {

constexpr int kMaxKernelN = 8;
constexpr int kMaxPairs = kMaxKernelN * (kMaxKernelN - 1) / 2;
constexpr int kMaxTriples = 56;

struct PairTable {
  int n = 0;
  int count = 0;
  std::array<std::array<int, kMaxKernelN>, kMaxKernelN> index{};
  std::array<std::uint64_t, kMaxPairs> bits{};

  explicit PairTable(int n_) : n(n_) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        index[a][b] = index[b][a] = count;
        bits[count++] = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      }
  }
};

struct TripleTable {
  PairTable pairs;
  int count = 0;
  std::array<std::uint64_t, kMaxTriples> bits{};
  std::array<std::array<int, 3>, kMaxTriples> pair{};
  std::array<std::array<std::uint64_t, 3>, kMaxTriples> third{};

  explicit TripleTable(int n) : pairs(n) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          bits[count] = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c);
          pair[count] = {pairs.index[a][b], pairs.index[a][c], pairs.index[b][c]};
          third[count] = {std::uint64_t{1} << c, std::uint64_t{1} << b, std::uint64_t{1} << a};
          ++count;
        }
  }
};

// Distinct values of a small array, sorted in place; returns how many.
int dedup(std::uint64_t* v, int len) {
  std::sort(v, v + len);
  return static_cast<int>(std::unique(v, v + len) - v);
}

struct Evaluation {
  int count = 0;
  int max_size = 0;
  bool universal = false;
  bool antichain_ok = true;
  bool antichain_checked = false;
};

// Lines (or closure-lines) of the hypergraph selected by `mask`; the distinct
// family is left in `lines[0..count)`.
Evaluation evaluate(const TripleTable& t, std::uint64_t mask, Quantity q, std::uint64_t* lines) {
  const int pairs = t.pairs.count;
  const int n = t.pairs.n;
  std::copy(t.pairs.bits.begin(), t.pairs.bits.begin() + pairs, lines);
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    for (int r = 0; r < 3; ++r) lines[t.pair[i][r]] |= t.third[i][r];
  }
  if (q == Quantity::ClosureLines) {
    std::array<std::uint64_t, kMaxTriples> edges{};
    int edge_count = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) edges[edge_count++] = t.bits[std::countr_zero(m)];
    for (int p = 0; p < pairs; ++p) {
      std::uint64_t set = lines[p];
      for (bool grew = true; grew;) {
        grew = false;
        for (int e = 0; e < edge_count; ++e) {
          const std::uint64_t edge = edges[e];
          if ((edge & ~set) != 0 && std::popcount(edge & set) >= 2) {
            set |= edge;
            grew = true;
          }
        }
      }
      lines[p] = set;
    }
  }
  Evaluation ev;
  ev.count = dedup(lines, pairs);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < ev.count; ++i) {
    ev.max_size = std::max(ev.max_size, std::popcount(lines[i]));
    ev.universal = ev.universal || lines[i] == all;
  }
  if (q == Quantity::Lines && !ev.universal) {
    ev.antichain_checked = true;
    std::array<std::uint64_t, kMaxKernelN> through{};
    for (int i = 0; i < ev.count; ++i)
      for (std::uint64_t m = lines[i]; m != 0; m &= m - 1) through[std::countr_zero(m)] |= std::uint64_t{1} << i;
    for (int x = 0; x < n && ev.antichain_ok; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && (through[x] & ~through[y]) == 0) {
          ev.antichain_ok = false;
          break;
        }
  }
  return ev;
}

struct ShardResult {
  std::array<std::int64_t, kMaxKernelN + 1> best{};  // by max line size
  std::array<std::uint64_t, kMaxKernelN + 1> best_mask{};
  std::array<std::uint64_t, kMaxKernelN + 1> by_size{};
  std::uint64_t scanned = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t antichain_checks = 0;
  std::uint64_t bound_checks = 0;
  bool violated = false;
  std::uint64_t violation_mask = 0;

  ShardResult() { best.fill(std::numeric_limits<std::int64_t>::max()); }

  void offer(int size, std::int64_t count, std::uint64_t mask) {
    if (count < best[size] || (count == best[size] && mask < best_mask[size])) {
      best[size] = count;
      best_mask[size] = mask;
    }
  }

  void merge(const ShardResult& o) {
    for (int s = 0; s <= kMaxKernelN; ++s) {
      if (o.best[s] != std::numeric_limits<std::int64_t>::max()) offer(s, o.best[s], o.best_mask[s]);
      by_size[s] += o.by_size[s];
    }
    scanned += o.scanned;
    evaluated += o.evaluated;
    antichain_checks += o.antichain_checks;
    bound_checks += o.bound_checks;
    if (o.violated && (!violated || o.violation_mask < violation_mask)) {
      violated = true;
      violation_mask = o.violation_mask;
    }
  }
};

// Triple permutation tables for canonical-form pruning.
std::vector<std::array<std::uint8_t, kMaxTriples>> triple_permutations(const TripleTable& t) {
  const int n = t.pairs.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::array<std::uint8_t, kMaxTriples>> out;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::array<std::uint8_t, kMaxTriples> map{};
    for (int i = 0; i < t.count; ++i) {
      std::uint64_t img = 0;
      for (std::uint64_t m = t.bits[i]; m != 0; m &= m - 1) img |= std::uint64_t{1} << perm[std::countr_zero(m)];
      map[i] = static_cast<std::uint8_t>(std::find(t.bits.begin(), t.bits.begin() + t.count, img) - t.bits.begin());
    }
    out.push_back(map);
  }
  return out;
}

bool is_canonical(std::uint64_t mask, const std::vector<std::array<std::uint8_t, kMaxTriples>>& perms) {
  for (const auto& map : perms) {
    std::uint64_t img = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) img |= std::uint64_t{1} << map[std::countr_zero(m)];
    if (img < mask) return false;
  }
  return true;
}

bool instance_within_bounds(int n, int lg, int sperner, const Evaluation& ev, Quantity q) {
  if (ev.count < pair_cover_bound(n, ev.max_size)) return false;
  if (q == Quantity::Lines && ev.max_size <= n - 1) {
    if (ev.count < lg || ev.count < sperner) return false;
    if (!ev.antichain_ok) return false;
  }
  return true;
}

}  // namespace

SearchReport exhaustive_m(int n, int k, Quantity q, const SearchOptions& options) {
  const int limit = options.max_n > 0 ? std::min(options.max_n, 7) : exhaustive_limit();
  if (n < 2 || k < 2 || k > n) {
    throw Error(Errc::BadParams, "exhaustive search needs 2 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  if (n > limit) {
    throw Error(Errc::TooLarge, "exhaustive search is limited to n <= " + std::to_string(limit) + " (LINESPACE_MAX_N)");
  }
  const TripleTable table(n);
  const int t_bits = table.count;
  int shard_bits = 0;
  while ((1 << shard_bits) < std::max(options.shards, 1) && shard_bits < t_bits) ++shard_bits;
  const std::int64_t shards = std::int64_t{1} << shard_bits;
  const std::uint64_t per_shard = std::uint64_t{1} << (t_bits - shard_bits);
  const auto perms = options.canonical_pruning ? triple_permutations(table) : decltype(triple_permutations(table)){};
  const int lg = ceil_lg(n), sperner = sperner_lower_bound(n);

  std::vector<ShardResult> results(static_cast<std::size_t>(shards));
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(options.threads, 1))
  for (std::int64_t s = 0; s < shards; ++s) {
    ShardResult& res = results[static_cast<std::size_t>(s)];
    std::array<std::uint64_t, kMaxPairs> lines{};
    for (std::uint64_t high = 0; high < per_shard; ++high) {
      const std::uint64_t mask = (high << shard_bits) | static_cast<std::uint64_t>(s);
      ++res.scanned;
      if (options.canonical_pruning && !is_canonical(mask, perms)) continue;
      ++res.evaluated;
      const Evaluation ev = evaluate(table, mask, q, lines.data());
      ++res.bound_checks;
      if (ev.antichain_checked) ++res.antichain_checks;
      if (!instance_within_bounds(n, lg, sperner, ev, q) && !res.violated) {
        res.violated = true;
        res.violation_mask = mask;
      }
      ++res.by_size[ev.max_size];
      res.offer(ev.max_size, ev.count, mask);
    }
  }
  ShardResult total;
  for (const auto& r : results) total.merge(r);
  if (total.violated) {
    throw Error(Errc::BoundViolated, "hypergraph mask " + std::to_string(total.violation_mask) + " on " + std::to_string(n) +
                                         " vertices breaks a lower bound");
  }

  SearchReport report;
  report.quantity = q;
  report.n = n;
  report.k = k;
  report.instances_scanned = total.scanned;
  report.instances_evaluated = total.evaluated;
  report.antichain_checks = total.antichain_checks;
  report.instance_bound_checks = total.bound_checks;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t best_mask = 0;
  for (int s = 0; s <= k; ++s) {
    report.instances_within_k += total.by_size[s];
    if (total.best[s] < best || (total.best[s] == best && total.best_mask[s] < best_mask)) {
      best = total.best[s];
      best_mask = total.best_mask[s];
    }
  }
  if (options.canonical_pruning) report.instances_within_k = 0;  // orbit representatives only; not comparable
  report.value = best;
  report.best_found = best;
  report.witness_mask = best_mask;
  report.witness = hypergraph_from_mask(n, best_mask);
  report.bound_checks = lower_bound_checks(n, k, best, q);
  return report;
}

namespace {

struct ScanAccumulator {
  ScanLevel level;
  std::vector<ScanCounterexample> counterexamples;
  std::vector<ScanCounterexample> sg_failures;

  void merge(const ScanAccumulator& o) {
    level.enumerated += o.level.enumerated;
    level.instances += o.level.instances;
    level.with_universal_line += o.level.with_universal_line;
    if (o.level.min_lines_without_universal != 0 &&
        (level.min_lines_without_universal == 0 || o.level.min_lines_without_universal < level.min_lines_without_universal)) {
      level.min_lines_without_universal = o.level.min_lines_without_universal;
    }
    level.sylvester_gallai_universal += o.level.sylvester_gallai_universal;
    level.sylvester_gallai_two_point += o.level.sylvester_gallai_two_point;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    sg_failures.insert(sg_failures.end(), o.sg_failures.begin(), o.sg_failures.end());
  }
};

// Distance matrix for one encoding; false when the graph is disconnected.
bool distances_for(ScanSource source, const PairTable& pairs, std::uint64_t code,
                   std::array<std::array<int, kMaxKernelN>, kMaxKernelN>& d) {
  const int n = pairs.n;
  if (source == ScanSource::Matrices) {
    for (int a = 0; a < n; ++a) {
      d[a][a] = 0;
      for (int b = a + 1; b < n; ++b) d[a][b] = d[b][a] = ((code >> pairs.index[a][b]) & 1U) ? 2 : 1;
    }
    return true;
  }
  std::array<std::uint64_t, kMaxKernelN> adj{};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((code >> pairs.index[a][b]) & 1U) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
      }
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s, frontier = seen;
    d[s][s] = 0;
    for (int depth = 1; frontier != 0; ++depth) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= adj[std::countr_zero(m)];
      next &= ~seen;
      for (std::uint64_t m = next; m != 0; m &= m - 1) d[s][std::countr_zero(m)] = depth;
      seen |= next;
      frontier = next;
    }
    if (seen != (std::uint64_t{1} << n) - 1) return false;
  }
  return true;
}

ScanCounterexample record(int n, std::uint64_t code, const std::array<std::array<int, kMaxKernelN>, kMaxKernelN>& d,
                          std::size_t count) {
  ScanCounterexample c;
  c.n = n;
  c.encoding = code;
  c.line_count = count;
  for (int a = 0; a < n; ++a) c.dist.emplace_back(d[a].begin(), d[a].begin() + n);
  return c;
}

void scan_one(ScanSource source, const PairTable& pairs, std::uint64_t code, ScanAccumulator& acc) {
  const int n = pairs.n;
  ++acc.level.enumerated;
  std::array<std::array<int, kMaxKernelN>, kMaxKernelN> d{};
  if (!distances_for(source, pairs, code, d)) return;
  ++acc.level.instances;

  std::array<std::uint64_t, kMaxPairs> lines{};
  std::array<std::uint64_t, kMaxTriples> edges{};
  int edge_count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::uint64_t l = pairs.bits[pairs.index[a][b]];
      for (int p = 0; p < n; ++p) {
        if (p == a || p == b) continue;
        if (d[p][a] + d[a][b] == d[p][b] || d[a][p] + d[p][b] == d[a][b] || d[a][b] + d[b][p] == d[a][p]) {
          l |= std::uint64_t{1} << p;
          if (p > b) edges[edge_count++] = pairs.bits[pairs.index[a][b]] | (std::uint64_t{1} << p);
        }
      }
      lines[pairs.index[a][b]] = l;
    }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  // Sylvester-Gallai before dedup: pairs are still in lexicographic order.
  bool sg_found = false;
  for (int p = 0; p < pairs.count && !sg_found; ++p) {
    std::uint64_t set = pairs.bits[p];
    for (std::size_t e = 0; e < static_cast<std::size_t>(edge_count);) {
      const std::uint64_t edge = edges[e];
      if ((edge & ~set) != 0 && std::popcount(edge & set) >= 2) {
        set |= edge;
        e = 0;
      } else {
        ++e;
      }
    }
    if (set == all) {
      ++acc.level.sylvester_gallai_universal;
      sg_found = true;
    } else if (std::popcount(set) == 2) {
      ++acc.level.sylvester_gallai_two_point;
      sg_found = true;
    }
  }
  if (!sg_found) acc.sg_failures.push_back(record(n, code, d, 0));

  const int count = dedup(lines.data(), pairs.count);
  const bool universal = std::find(lines.begin(), lines.begin() + count, all) != lines.begin() + count;
  if (universal) {
    ++acc.level.with_universal_line;
    return;
  }
  const auto c = static_cast<std::uint64_t>(count);
  if (acc.level.min_lines_without_universal == 0 || c < acc.level.min_lines_without_universal) {
    acc.level.min_lines_without_universal = c;
  }
  if (count < n) acc.counterexamples.push_back(record(n, code, d, static_cast<std::size_t>(count)));
}

}  // namespace

ScanReport conjecture_scan(ScanSource source, int max_n, const ScanOptions& options) {
  const int cap = source == ScanSource::Graphs ? 7 : 5;
  if (max_n < 2 || max_n > cap) {
    throw Error(Errc::TooLarge, "scan supports 2 <= max_n <= " + std::to_string(cap) + ", got " + std::to_string(max_n));
  }
  ScanReport report;
  report.source = source;
  report.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) {
    const PairTable pairs(n);
    const std::int64_t total = std::int64_t{1} << pairs.count;
    const int threads = std::max(options.threads, 1);
    std::vector<ScanAccumulator> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      ScanAccumulator& acc = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static, 4096)
      for (std::int64_t code = 0; code < total; ++code) scan_one(source, pairs, static_cast<std::uint64_t>(code), acc);
    }
    ScanAccumulator merged;
    merged.level.n = n;
    for (const auto& p : partial) merged.merge(p);
    auto by_code = [](const ScanCounterexample& a, const ScanCounterexample& b) { return a.encoding < b.encoding; };
    std::sort(merged.counterexamples.begin(), merged.counterexamples.end(), by_code);
    std::sort(merged.sg_failures.begin(), merged.sg_failures.end(), by_code);
    report.levels.push_back(merged.level);
    report.counterexamples.insert(report.counterexamples.end(), merged.counterexamples.begin(), merged.counterexamples.end());
    report.sylvester_gallai_failures.insert(report.sylvester_gallai_failures.end(), merged.sg_failures.begin(),
                                            merged.sg_failures.end());
  }
  return report;
}

}  // namespace linespace
