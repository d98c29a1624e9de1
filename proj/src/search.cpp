#include "linespace/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "linespace/closure.hpp"
#include "linespace/constructions.hpp"

namespace linespace {

std::string_view quantity_name(Quantity q) { return q == Quantity::Lines ? "m" : "mbar"; }

int ceil_lg(std::int64_t n) {
  int m = 0;
  while ((std::int64_t{1} << m) < n) ++m;
  return m;
}

int sperner_lower_bound(std::int64_t n) {
  int m = 0;
  while (binomial(m, m / 2) < n) ++m;
  return m;
}

std::int64_t pair_cover_bound(std::int64_t n, std::int64_t k) {
  const std::int64_t num = n * (n - 1), den = k * (k - 1);
  return (num + den - 1) / den;
}

std::vector<BoundCheck> lower_bound_checks(int n, int k, std::int64_t count, Quantity q) {
  std::vector<BoundCheck> out;
  auto add = [&](std::string name, std::int64_t bound) {
    out.push_back(BoundCheck{std::move(name), bound, count, count >= bound});
  };
  if (q == Quantity::Lines) {
    if (k <= n - 1) {
      add("lines:ceil_lg_n", ceil_lg(n));
      add("lines:sperner_antichain", sperner_lower_bound(n));
    }
    add("lines:pair_cover", pair_cover_bound(n, k));
  } else {
    add("closure_lines:pair_cover", pair_cover_bound(n, k));
  }
  return out;
}

std::vector<BoundCheck> verify_bounds(const Hypergraph& h, int k) {
  const int n = h.size();
  if (n < 2 || k < 2) throw Error(Errc::BadParams, "verify_bounds needs n >= 2 and k >= 2");
  std::vector<BoundCheck> out;
  const LineReport lines = all_lines_hg(h);
  const LineFamily closure_lines = all_closure_lines(h);
  const bool lines_fit = lines.max_line_size <= k;
  const bool closure_fits = closure_lines.max_line_size() <= k;
  if (!lines_fit && !closure_fits) {
    throw Error(Errc::BadParams, "largest line has " + std::to_string(lines.max_line_size) + " > k=" + std::to_string(k) +
                                     " vertices");
  }
  if (lines_fit) {
    auto c = lower_bound_checks(n, k, static_cast<std::int64_t>(lines.count), Quantity::Lines);
    out.insert(out.end(), c.begin(), c.end());
    if (!lines.has_universal_line) {
      const bool ok = lines_through_vertices_form_antichain(lines.family);
      out.push_back(BoundCheck{"lines:vertex_antichain", 1, ok ? 1 : 0, ok});
    }
  }
  if (closure_fits) {
    auto c = lower_bound_checks(n, k, static_cast<std::int64_t>(closure_lines.count()), Quantity::ClosureLines);
    out.insert(out.end(), c.begin(), c.end());
  }
  for (const auto& c : out) {
    if (!c.satisfied) {
      throw Error(Errc::BoundViolated, c.name + ": " + std::to_string(c.value) + " < " + std::to_string(c.bound));
    }
  }
  return out;
}

int exhaustive_limit() {
  int limit = 6;
  if (const char* env = std::getenv("LINESPACE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) limit = static_cast<int>(std::min<long>(v, 7));
  }
  return limit;
}

std::vector<VertexSet> lexicographic_triples(int n) {
  std::vector<VertexSet> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back(VertexSet::of({a, b, c}));
  return out;
}

Hypergraph hypergraph_from_mask(int n, std::uint64_t mask) {
  const auto triples = lexicographic_triples(n);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < triples.size(); ++i)
    if ((mask >> i) & 1U) edges.push_back(triples[i]);
  return Hypergraph(n, std::move(edges));
}

SearchReport sampled_m(int n, int k, Quantity q, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2 || n > kMaxVertices) throw Error(Errc::BadParams, "sampled search needs 2 <= n <= 64");
  if (k < 2 || k > n) throw Error(Errc::BadParams, "sampled search needs 2 <= k <= n");
  const auto triples = lexicographic_triples(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SearchReport r;
  r.quantity = q;
  r.n = n;
  r.k = k;
  r.truncated = true;
  r.best_found = -1;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double density = unit(rng);
    std::vector<VertexSet> edges;
    for (VertexSet t : triples)
      if (unit(rng) < density) edges.push_back(t);
    Hypergraph h(n, std::move(edges));
    ++r.instances_scanned;
    ++r.instances_evaluated;
    const LineFamily fam = q == Quantity::Lines ? all_lines_hg(h).family : all_closure_lines(h);
    const int size = fam.max_line_size();
    const auto count = static_cast<std::int64_t>(fam.count());
    for (const auto& c : lower_bound_checks(n, size, count, q)) {
      ++r.instance_bound_checks;
      if (!c.satisfied) throw Error(Errc::BoundViolated, c.name + " on a sampled hypergraph");
    }
    if (q == Quantity::Lines && !fam.has_universal_line()) {
      ++r.antichain_checks;
      if (!lines_through_vertices_form_antichain(fam)) throw Error(Errc::BoundViolated, "antichain on a sampled hypergraph");
    }
    if (size > k) continue;
    ++r.instances_within_k;
    if (r.best_found < 0 || count < r.best_found) {
      r.best_found = count;
      r.witness = std::move(h);
    }
  }
  if (r.best_found >= 0) r.bound_checks = lower_bound_checks(n, k, r.best_found, q);
  return r;
}

}  // namespace linespace
