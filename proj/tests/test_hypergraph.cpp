#include "doctest.h"

#include <random>

#include "linespace/constructions.hpp"
#include "linespace/hypergraph.hpp"

using namespace linespace;

TEST_CASE("lines in the Fano plane") {
  const Hypergraph f = fano();
  CHECK(line_hg(f, 0, 1) == VertexSet::of({0, 1, 3}));
  const LineReport r = all_lines_hg(f);
  CHECK(r.count == 7);
  CHECK_FALSE(r.has_universal_line);
  CHECK(r.max_line_size == 3);
  CHECK(r.family.lines() == f.edges());  // every line is an edge
  const auto de = check_debruijn_erdos(f);
  CHECK(de.count == 7);
  CHECK(de.satisfies);
  CHECK(lines_through_vertices_form_antichain(r.family));
}

TEST_CASE("degenerate hypergraphs") {
  const Hypergraph empty(5, {});
  CHECK(line_hg(empty, 1, 3) == VertexSet::pair(1, 3));
  CHECK(all_lines_hg(empty).count == 10);

  const Hypergraph whole(4, {VertexSet::full(4)});
  CHECK(line_hg(whole, 0, 2) == VertexSet::full(4));
  const LineReport r = all_lines_hg(whole);
  CHECK(r.count == 1);
  CHECK(r.has_universal_line);
  CHECK(check_debruijn_erdos(whole).satisfies);

  CHECK_THROWS_AS(line_hg(empty, 2, 2), Error);
  CHECK_THROWS_AS(Hypergraph(3, {VertexSet::single(0)}), Error);
  CHECK_THROWS_AS(Hypergraph(3, {VertexSet::of({0, 5})}), Error);
}

TEST_CASE("3-uniform reduction") {
  const Hypergraph h(4, {VertexSet::full(4)});
  const Hypergraph r = reduce_to_3uniform(h);
  CHECK(r.is_three_uniform());
  CHECK(r.edges().size() == 4);

  const Hypergraph already(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})});
  CHECK(reduce_to_3uniform(already) == already);

  const Hypergraph with_pair(4, {VertexSet::pair(1, 2), VertexSet::of({0, 1, 3})});
  const Hypergraph reduced = reduce_to_3uniform(with_pair);
  CHECK(reduced.edges() == std::vector<VertexSet>{VertexSet::of({0, 1, 3})});
  CHECK(all_lines_hg(with_pair).family == all_lines_hg(reduced).family);
}

TEST_CASE("property: reduction preserves lines and every line contains its pair") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<VertexSet> edges;
    const int m = static_cast<int>(rng() % 6);
    for (int e = 0; e < m; ++e) {
      VertexSet s(rng() & VertexSet::full(n).bits());
      if (s.size() >= 2) edges.push_back(s);
    }
    const Hypergraph h(n, edges);
    CHECK(all_lines_hg(h).family == all_lines_hg(reduce_to_3uniform(h)).family);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) CHECK(line_hg(h, u, v).contains(VertexSet::pair(u, v)));
    const LineReport r = all_lines_hg(h);
    if (!r.has_universal_line) CHECK(lines_through_vertices_form_antichain(r.family));
  }
}
