#include "doctest.h"

#include <cstdlib>
#include <map>

#include "linespace/closure.hpp"
#include "linespace/constructions.hpp"
#include "linespace/search.hpp"

using namespace linespace;

namespace {

// Values from an independent brute force over all labeled 3-uniform
// hypergraphs (tests/oracles/extremal_oracle.py); m and mbar coincide here.
const std::map<std::pair<int, int>, std::int64_t> kGolden{
    {{3, 2}, 3}, {{3, 3}, 1},
    {{4, 2}, 6}, {{4, 3}, 4}, {{4, 4}, 1},
    {{5, 2}, 10}, {{5, 3}, 6}, {{5, 4}, 5}, {{5, 5}, 1},
    {{6, 2}, 15}, {{6, 3}, 7}, {{6, 4}, 7}, {{6, 5}, 6}, {{6, 6}, 1},
};

void check_same(const SearchReport& a, const SearchReport& b) {
  CHECK(a.value == b.value);
  CHECK(a.witness_mask == b.witness_mask);
  CHECK(a.instances_scanned == b.instances_scanned);
}

}  // namespace

TEST_CASE("bound helpers") {
  CHECK(ceil_lg(1) == 0);
  CHECK(ceil_lg(2) == 1);
  CHECK(ceil_lg(5) == 3);
  CHECK(ceil_lg(8) == 3);
  CHECK(sperner_lower_bound(1) == 0);
  CHECK(sperner_lower_bound(2) == 2);
  CHECK(sperner_lower_bound(3) == 3);
  CHECK(sperner_lower_bound(4) == 4);
  CHECK(sperner_lower_bound(6) == 4);
  CHECK(sperner_lower_bound(7) == 5);
  CHECK(pair_cover_bound(7, 3) == 7);
  CHECK(pair_cover_bound(6, 3) == 5);
  CHECK(pair_cover_bound(5, 5) == 1);

  const auto checks = lower_bound_checks(6, 6, 1, Quantity::Lines);
  CHECK(checks.size() == 1);  // k = n: only the pair-cover bound applies
  CHECK(lower_bound_checks(6, 3, 7, Quantity::Lines).size() == 3);
  CHECK(lower_bound_checks(6, 3, 7, Quantity::ClosureLines).size() == 1);
}

TEST_CASE("lexicographic triples and masks") {
  const auto t = lexicographic_triples(4);
  CHECK(t == std::vector<VertexSet>{VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 3}), VertexSet::of({0, 2, 3}),
                                    VertexSet::of({1, 2, 3})});
  const Hypergraph h = hypergraph_from_mask(4, 0b0101);
  CHECK(h.edges() == std::vector<VertexSet>{VertexSet::of({0, 1, 2}), VertexSet::of({0, 2, 3})});
}

TEST_CASE("golden m and mbar values") {
  for (const auto& [nk, value] : kGolden) {
    const auto [n, k] = nk;
    for (Quantity q : {Quantity::Lines, Quantity::ClosureLines}) {
      CAPTURE(n);
      CAPTURE(k);
      const SearchReport r = exhaustive_m(n, k, q);
      REQUIRE(r.value.has_value());
      CHECK(*r.value == value);
      CHECK_FALSE(r.truncated);
      CHECK(r.instances_scanned == (std::uint64_t{1} << binomial(n, 3)));
      const LineFamily fam = q == Quantity::Lines ? all_lines_hg(r.witness).family : all_closure_lines(r.witness);
      CHECK(static_cast<std::int64_t>(fam.count()) == value);
      CHECK(fam.max_line_size() <= k);
      CHECK(r.witness == hypergraph_from_mask(n, r.witness_mask));
    }
  }
}

TEST_CASE("kernel agrees with the serial reference") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k <= n; ++k)
      for (Quantity q : {Quantity::Lines, Quantity::ClosureLines}) {
        const SearchReport a = exhaustive_m(n, k, q);
        const SearchReport b = exhaustive_m_reference(n, k, q);
        check_same(a, b);
        CHECK(a.instances_within_k == b.instances_within_k);
      }
}

TEST_CASE("sharding, threads and canonical pruning do not change the answer") {
  for (int k = 2; k <= 5; ++k) {
    const SearchReport base = exhaustive_m(5, k, Quantity::ClosureLines);
    for (int shards : {2, 8, 64}) check_same(base, exhaustive_m(5, k, Quantity::ClosureLines, {2, shards, false, -1}));
    const SearchReport canon = exhaustive_m(5, k, Quantity::ClosureLines, {1, 4, true, -1});
    check_same(base, canon);
    CHECK(canon.instances_evaluated < base.instances_evaluated);
  }
}

TEST_CASE("m is non-increasing in k") {
  for (int n = 3; n <= 5; ++n) {
    std::int64_t prev = INT64_MAX;
    for (int k = 2; k <= n; ++k) {
      const std::int64_t v = *exhaustive_m(n, k, Quantity::Lines).value;
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("search limits") {
  CHECK(exhaustive_limit() >= 6);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::BadInput;
  };
  CHECK(code([] { exhaustive_m(8, 3, Quantity::Lines); }) == Errc::TooLarge);
  CHECK(code([] { exhaustive_m(5, 1, Quantity::Lines); }) == Errc::BadParams);
  const SearchReport s = sampled_m(7, 3, Quantity::Lines, 2000, 5);
  CHECK(s.truncated);
  CHECK_FALSE(s.value.has_value());
  CHECK(s.best_found >= 7);
}

TEST_CASE("verify_bounds") {
  const auto checks = verify_bounds(fano(), 3);
  for (const auto& c : checks) CHECK(c.satisfied);
  CHECK(std::any_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.name == "lines:vertex_antichain"; }));
  const auto sw = verify_bounds(sandwich_construction(25, 12), 12);
  for (const auto& c : sw) CHECK(c.satisfied);
}

TEST_CASE("conjecture scan agrees with the reference") {
  for (int n = 2; n <= 5; ++n) {
    const ScanReport a = conjecture_scan(ScanSource::Graphs, n);
    const ScanReport b = conjecture_scan_reference(ScanSource::Graphs, n);
    CHECK(a.levels == b.levels);
    CHECK(a.counterexamples.empty());
    CHECK(b.counterexamples.empty());
  }
  const ScanReport m = conjecture_scan(ScanSource::Matrices, 4);
  CHECK(m.levels == conjecture_scan_reference(ScanSource::Matrices, 4).levels);
  CHECK(m.counterexamples.empty());
  // Connected graphs on 4 labeled vertices: 38 of the 64.
  const ScanReport g4 = conjecture_scan(ScanSource::Graphs, 4);
  CHECK(g4.levels.back().n == 4);
  CHECK(g4.levels.back().enumerated == 64);
  CHECK(g4.levels.back().instances == 38);
}
