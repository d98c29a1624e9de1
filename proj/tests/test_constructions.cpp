#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "linespace/closure.hpp"
#include "linespace/constructions.hpp"

using namespace linespace;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadInput;
}

}  // namespace

TEST_CASE("pentagon and Fano") {
  const MetricSpace p = pentagon();
  CHECK(p.size() == 5);
  const Hypergraph f = fano();
  CHECK(f.edges().size() == 7);
  CHECK(f.is_three_uniform());
  CHECK(std::find(f.edges().begin(), f.edges().end(), VertexSet::of({0, 1, 3})) != f.edges().end());
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b) CHECK((f.edges()[a] & f.edges()[b]).size() == 1);
}

TEST_CASE("choose_strings") {
  const auto two = choose_strings(2, 3, 4);
  CHECK(two == std::vector<Word>{{0, 0, 0}, {3, 3, 3}});
  const auto four = choose_strings(4, 2, 2);
  CHECK(four.size() == 4);
  std::set<Word> distinct(four.begin(), four.end());
  CHECK(distinct.size() == 4);
  CHECK(choose_strings(9, 2, 3).size() == 9);
  CHECK(error_of([] { choose_strings(5, 2, 2); }) == Errc::BadParams);
  CHECK(error_of([] { choose_strings(1, 2, 2); }) == Errc::BadParams);
}

TEST_CASE("lemma2 construction") {
  Lemma2Layout layout;
  const Hypergraph h = lemma2_construction(6, 2, 2, &layout);
  const LineReport r = all_lines_hg(h);
  CHECK(h.size() == 6);
  CHECK_FALSE(r.has_universal_line);
  CHECK(r.count <= 8);
  CHECK(layout.words.size() == 4);

  const LineReport r2 = all_lines_hg(lemma2_construction(5, 3, 2));
  CHECK(r2.count <= 14);
  CHECK_FALSE(r2.has_universal_line);

  CHECK(error_of([] { lemma2_construction(4, 3, 2); }) == Errc::BadParams);
  CHECK(error_of([] { lemma2_construction(20, 2, 3); }) == Errc::BadParams);  // 18 > 3^2
}

TEST_CASE("thm3 parameters") {
  const Thm3Params big = thm3_params(1'000'000);
  // ln(1e6)/ln(1.5) = 34.07..., so ell = 6 and a = floor(1.9^6) = 47.
  CHECK(big.ell == static_cast<int>(std::ceil(std::sqrt(std::log(1e6) / std::log(1.5)))));
  CHECK(big.ell == 6);
  CHECK(big.alphabet == 47);
  CHECK(error_of([] { thm3_params(3); }) == Errc::NoValidParams);
  for (int n = 4; n <= 64; ++n) {
    const Thm3Params tp = thm3_params(n);
    const double x = std::log(static_cast<double>(n)) / std::log(1.5);
    CHECK(tp.ell == static_cast<int>(std::ceil(std::sqrt(x))));
    CHECK(tp.alphabet == static_cast<std::int64_t>(std::floor(std::pow(1.9, tp.ell))));
    const Hypergraph h = lemma2_construction(n, tp.ell, static_cast<int>(tp.alphabet));
    CHECK(static_cast<std::int64_t>(all_lines_hg(h).count) <= lemma2_bound(tp.ell, static_cast<int>(tp.alphabet)));
  }
}

TEST_CASE("thm5 space") {
  CHECK(error_of([] { thm5_space(5); }) == Errc::BadParams);
  const MetricSpace s = thm5_space(7);
  const Hypergraph h = associated_hypergraph(s);
  CHECK(affine_closure(h, VertexSet::pair(0, 2)) == VertexSet::pair(0, 2));
}

TEST_CASE("round-robin 1-factorization") {
  const OneFactorization f2 = round_robin_factorization(2);
  CHECK(f2.color(1, 2) == 1);
  for (int p : {4, 6, 8, 10}) {
    const OneFactorization f = round_robin_factorization(p);
    CHECK(f.is_valid());
    // Each color class is a perfect matching with p/2 edges.
    for (int w = 1; w < p; ++w) {
      int edges = 0;
      for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) edges += f.color(i, j) == w;
      CHECK(edges == p / 2);
      for (int i = 1; i <= p; ++i) CHECK(f.color(i, f.partner(i, w)) == w);
    }
  }
  CHECK(error_of([] { round_robin_factorization(5); }) == Errc::OddP);
  CHECK(error_of([] { round_robin_factorization(0); }) == Errc::OddP);
}

TEST_CASE("sandwich construction") {
  SandwichLayout lay;
  const Hypergraph h = sandwich_construction(25, 12, &lay);
  CHECK(lay.p == 6);
  const LineFamily cl = all_closure_lines(h);
  CHECK(cl.count() <= 22);
  CHECK(cl.count() == 1 + 15 + 6);
  CHECK(cl.max_line_size() <= 12);

  SandwichLayout small;
  sandwich_construction(13, 12, &small);
  CHECK(small.p == 4);
  for (VertexSet part : small.parts) {
    CHECK(part.size() >= 2);
    CHECK(2 * part.size() <= 11);
  }

  CHECK(error_of([] { sandwich_construction(12, 12); }) == Errc::BadParams);
  CHECK(error_of([] { sandwich_construction(5, 3); }) == Errc::BadParams);  // parts would be empty

  // n=45, k=9 recurses once: p=12, the core of 11 vertices is itself a
  // sandwich with p=4.
  SandwichLayout rec;
  const Hypergraph deep = sandwich_construction(45, 9, &rec);
  CHECK(rec.p == 12);
  CHECK(rec.core_closure_lines.size() == 1 + 6 + 4);
  const LineFamily dl = all_closure_lines(deep);
  CHECK(dl.count() == 11 + 66 + 12);
  CHECK(dl.max_line_size() <= 9);
}

TEST_CASE("greedy packing") {
  const Hypergraph sts = greedy_packing(7, 3);
  CHECK(sts.edges().size() == 7);
  CHECK(all_lines_hg(sts).count == 7);

  const Hypergraph four = greedy_packing(4, 3);
  CHECK(four.edges() == std::vector<VertexSet>{VertexSet::of({0, 1, 2})});
  CHECK(all_lines_hg(four).count == 4);
  CHECK(packing_line_count(4, 3, 1) == 4);

  const Hypergraph single = greedy_packing(6, 6);
  CHECK(single.edges().size() == 1);
  CHECK(all_lines_hg(single).count == 1);

  CHECK(error_of([] { greedy_packing(3, 4); }) == Errc::BadParams);
}
