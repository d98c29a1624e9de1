#include "linespace/constructions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "linespace/closure.hpp"

namespace linespace {

namespace {

void self_check(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::SelfCheckFailed, what);
}

void require_params(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadParams, what);
}

void require_fits(int n) {
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "constructions support at most 64 vertices, got " + std::to_string(n));
}

// a^e, saturating at `cap`.
std::int64_t power_capped(std::int64_t a, int e, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (a != 0 && r > cap / a) return cap;
    r *= a;
  }
  return std::min(r, cap);
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

MetricSpace pentagon() {
  std::vector<std::vector<Rational>> dist(5, std::vector<Rational>(5));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int gap = std::abs(i - j);
      dist[i][j] = Rational(std::min(gap, 5 - gap));
    }
  }
  MetricSpace space = validate_metric(dist, {"u", "v", "x", "y", "z"});
  enum { u, v, x, y, z };
  self_check(line(space, v, y) == VertexSet::of({v, x, y}), "pentagon: line vy must be {v,x,y}");
  self_check(line(space, x, y) == VertexSet::of({v, x, y, z}), "pentagon: line xy must be {v,x,y,z}");
  return space;
}

Hypergraph fano() {
  std::vector<VertexSet> edges;
  for (int i = 0; i < 7; ++i) edges.push_back(VertexSet::of({i % 7, (i + 1) % 7, (i + 3) % 7}));
  Hypergraph h(7, edges);
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) {
      const auto n = std::count_if(h.edges().begin(), h.edges().end(),
                                   [&](VertexSet e) { return e.contains(VertexSet::pair(u, v)); });
      self_check(n == 1, "fano: pair in " + std::to_string(n) + " edges");
    }
  }
  return h;
}

std::vector<Word> choose_strings(std::int64_t count, int length, int alphabet) {
  require_params(length >= 1 && alphabet >= 2, "choose_strings needs length >= 1 and alphabet >= 2");
  const std::int64_t total = power_capped(alphabet, length, std::int64_t{1} << 62);
  require_params(count >= 2 && count <= total, "choose_strings needs 2 <= count <= a^ell");

  auto word_at = [&](std::int64_t index) {
    Word w(static_cast<std::size_t>(length));
    for (int pos = length - 1; pos >= 0; --pos) {
      w[static_cast<std::size_t>(pos)] = static_cast<int>(index % alphabet);
      index /= alphabet;
    }
    return w;
  };
  std::vector<Word> out{Word(static_cast<std::size_t>(length), 0), Word(static_cast<std::size_t>(length), alphabet - 1)};
  for (std::int64_t index = 1; static_cast<std::int64_t>(out.size()) < count; ++index) {
    Word w = word_at(index);
    if (w != out[1]) out.push_back(std::move(w));
  }
  for (int pos = 0; pos < length; ++pos) {
    const bool differs = std::any_of(out.begin(), out.end(), [&](const Word& w) { return w[pos] != out[0][pos]; });
    self_check(differs, "choose_strings: position " + std::to_string(pos) + " is constant");
  }
  return out;
}

std::int64_t lemma2_bound(int ell, int alphabet) {
  return (std::int64_t{1} << ell) + static_cast<std::int64_t>(ell) * alphabet;
}

Hypergraph lemma2_construction(int n, int ell, int alphabet, Lemma2Layout* layout) {
  require_params(ell >= 1 && alphabet >= 1, "lemma2 needs ell >= 1 and a >= 1");
  const std::int64_t words_needed = n - ell;
  require_params(words_needed >= 2 && words_needed <= power_capped(alphabet, ell, std::int64_t{1} << 62),
                 "lemma2 needs 2 <= n - ell <= a^ell (n=" + std::to_string(n) + ", ell=" + std::to_string(ell) +
                     ", a=" + std::to_string(alphabet) + ")");
  require_fits(n);
  const std::vector<Word> words = choose_strings(words_needed, ell, alphabet);

  std::vector<std::string> labels;
  for (int i = 0; i < ell; ++i) labels.push_back("p" + std::to_string(i + 1));
  for (const Word& w : words) {
    std::string s = "s:";
    for (std::size_t pos = 0; pos < w.size(); ++pos) s += (pos ? "." : "") + std::to_string(w[pos]);
    labels.push_back(s);
  }
  const VertexSet positions = VertexSet::full(ell);
  const VertexSet strings = VertexSet::full(n) - positions;
  std::vector<VertexSet> edges;
  if (positions.size() >= 2) edges.push_back(positions);
  edges.push_back(strings);
  for (int i = 0; i < ell; ++i) {
    for (int x = 0; x < alphabet; ++x) {
      VertexSet e = VertexSet::single(i);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (words[j][i] == x) e.insert(ell + static_cast<int>(j));
      }
      if (e.size() >= 2) edges.push_back(e);
    }
  }
  Hypergraph h(n, std::move(edges), std::move(labels));

  // Line anatomy, pair by pair.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const VertexSet l = line_hg(h, u, v);
      VertexSet expected;
      if (v < ell) {
        expected = positions;
      } else if (u < ell) {
        const int x = words[v - ell][u];
        expected = VertexSet::single(u);
        for (std::size_t j = 0; j < words.size(); ++j)
          if (words[j][u] == x) expected.insert(ell + static_cast<int>(j));
      } else {
        VertexSet agree;
        for (int i = 0; i < ell; ++i)
          if (words[u - ell][i] == words[v - ell][i]) agree.insert(i);
        self_check(agree != positions, "lemma2: two strings agree everywhere");
        expected = strings | agree;
      }
      self_check(l == expected, "lemma2: unexpected line through " + std::to_string(u) + "," + std::to_string(v));
    }
  }
  const LineReport report = all_lines_hg(h);
  self_check(!report.has_universal_line, "lemma2: universal line");
  self_check(static_cast<std::int64_t>(report.count) <= lemma2_bound(ell, alphabet), "lemma2: too many lines");
  if (layout) *layout = Lemma2Layout{ell, alphabet, words};
  return h;
}

Thm3Params thm3_params(std::int64_t n) {
  // beta = 3/2, gamma = 19/10. ell = ceil(sqrt(ln n / ln beta)) is the least
  // ell >= 1 with beta^(ell^2) >= n, i.e. 3^(ell^2) >= n 2^(ell^2).
  if (n < 2) throw Error(Errc::NoValidParams, "n must be at least 2");
  const mpz_class nn(std::to_string(n));
  int ell = 1;
  for (;; ++ell) {
    mpz_class three, two;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(ell * ell));
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(ell * ell));
    if (three >= nn * two) break;
  }
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), 19, static_cast<unsigned long>(ell));
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(ell));
  const mpz_class a = num / den;
  mpz_class a_pow;
  mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(ell));
  const mpz_class rest = nn - ell;
  if (rest < 2 || rest > a_pow) {
    throw Error(Errc::NoValidParams, "n=" + std::to_string(n) + ": ell=" + std::to_string(ell) + ", a=" + a.get_str() +
                                         " violate 2 <= n - ell <= a^ell");
  }
  return Thm3Params{ell, a.get_si()};
}

MetricSpace thm5_space(int n) {
  require_params(n >= 6, "thm5 needs n >= 6, got " + std::to_string(n));
  require_fits(n);
  std::vector<std::pair<std::int64_t, std::int64_t>> pts{{1, 3}, {2, 4}, {3, 1}, {4, 2}};
  for (int k = 5; k <= n; ++k) pts.emplace_back(k, n + 5 - k);
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      dist[i][j] = Rational(std::abs(pts[i].first - pts[j].first) + std::abs(pts[i].second - pts[j].second));
    }
  }
  MetricSpace space = validate_metric(dist, labels);

  const Hypergraph h = associated_hypergraph(space);
  const VertexSet all = VertexSet::full(n);
  const VertexSet x12 = VertexSet::pair(0, 1), x34 = VertexSet::pair(2, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VertexSet expected;
      if (i == 0 && j == 1) expected = all - x34;
      else if (i == 2 && j == 3) expected = all - x12;
      else if (i >= 4) expected = all - x12 - x34;
      else if (i <= 1 && j <= 3) expected = VertexSet::pair(i, j);
      else if (i <= 1) expected = all - x34;
      else expected = all - x12;
      self_check(affine_closure(h, VertexSet::pair(i, j)) == expected,
                 "thm5: aff({x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "})");
    }
  }
  const LineFamily closure_lines = all_closure_lines(h);
  self_check(closure_lines.count() == 7, "thm5: closure-line count is not 7");
  self_check(closure_lines.max_line_size() <= n - 2, "thm5: closure-line larger than n - 2");
  return space;
}

OneFactorization::OneFactorization(int p) : p_(p), color_(static_cast<std::size_t>(p * p), 0) {
  if (p < 2 || p % 2 != 0) throw Error(Errc::OddP, "1-factorization needs an even p >= 2, got " + std::to_string(p));
  const int m = p - 1;  // vertices 1..m on the circle, p in the middle
  for (int r = 0; r < m; ++r) {
    auto set = [&](int a, int b) {
      color_[static_cast<std::size_t>((a - 1) * p + (b - 1))] = r + 1;
      color_[static_cast<std::size_t>((b - 1) * p + (a - 1))] = r + 1;
    };
    set(r + 1, p);
    for (int i = 1; i < p / 2; ++i) set((r + i) % m + 1, (r - i + m) % m + 1);
  }
}

int OneFactorization::partner(int i, int w) const {
  for (int j = 1; j <= p_; ++j)
    if (j != i && color(i, j) == w) return j;
  return 0;
}

bool OneFactorization::is_valid() const {
  for (int i = 1; i <= p_; ++i) {
    if (color(i, i) != 0) return false;
    for (int w = 1; w < p_; ++w) {
      int hits = 0;
      for (int j = 1; j <= p_; ++j)
        if (j != i && color(i, j) == w) ++hits;
      if (hits != 1) return false;
    }
    for (int j = 1; j <= p_; ++j)
      if (j != i && (color(i, j) < 1 || color(i, j) > p_ - 1 || color(i, j) != color(j, i))) return false;
  }
  return true;
}

OneFactorization round_robin_factorization(int p) {
  OneFactorization f(p);
  self_check(f.is_valid(), "round robin: not a 1-factorization");
  return f;
}

Hypergraph sandwich_construction(int n, int k, SandwichLayout* layout) {
  require_params(k >= 2 && n > k, "sandwich needs k >= 2 and n > k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  require_fits(n);
  const int p = 2 * ((n + 1 + k - 1) / k);
  const int core_size = p - 1;
  const int rest = n - core_size;
  const int small = rest / p, extra = rest % p;
  const int min_part = small, max_part = small + (extra ? 1 : 0);
  require_params(min_part >= 2 && 2 * max_part <= k - 1,
                 "sandwich(n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): part sizes " +
                     std::to_string(min_part) + ".." + std::to_string(max_part) + " outside 2..(k-1)/2");

  SandwichLayout lay;
  lay.n = n;
  lay.k = k;
  lay.p = p;
  lay.core = VertexSet::full(core_size);
  for (int w = 1; w <= core_size; ++w) lay.core_vertex.push_back(w - 1);

  std::vector<std::string> labels;
  std::vector<VertexSet> edges;
  if (core_size <= k) {
    edges.push_back(lay.core);
    lay.core_closure_lines = {lay.core};
    for (int c = 0; c < core_size; ++c) labels.push_back("c" + std::to_string(c));
  } else {
    SandwichLayout inner;
    const Hypergraph core = sandwich_construction(core_size, k, &inner);
    edges = core.edges();
    lay.core_closure_lines = inner.predicted_closure_lines;
    for (const auto& l : core.labels()) labels.push_back("c." + l);
  }

  int next = core_size;
  for (int i = 0; i < p; ++i) {
    const int sz = small + (i < extra ? 1 : 0);
    VertexSet part;
    for (int t = 0; t < sz; ++t) {
      labels.push_back("v" + std::to_string(i + 1) + "." + std::to_string(t + 1));
      part.insert(next++);
    }
    lay.parts.push_back(part);
  }

  const OneFactorization phi = round_robin_factorization(p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const int w = lay.core_vertex[static_cast<std::size_t>(phi.color(i + 1, j + 1) - 1)];
      lay.parts[i].for_each([&](int u) {
        lay.parts[j].for_each([&](int v) { edges.push_back(VertexSet::pair(u, v) | VertexSet::single(w)); });
      });
    }
  }
  for (VertexSet part : lay.parts) {
    const auto vs = part.to_vector();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        for (std::size_t c = b + 1; c < vs.size(); ++c) edges.push_back(VertexSet::of({vs[a], vs[b], vs[c]}));
  }
  Hypergraph h(n, std::move(edges), std::move(labels));

  lay.predicted_closure_lines = lay.core_closure_lines;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const int w = lay.core_vertex[static_cast<std::size_t>(phi.color(i + 1, j + 1) - 1)];
      lay.predicted_closure_lines.push_back(lay.parts[i] | lay.parts[j] | VertexSet::single(w));
    }
  }
  for (VertexSet part : lay.parts) lay.predicted_closure_lines.push_back(part);
  std::sort(lay.predicted_closure_lines.begin(), lay.predicted_closure_lines.end(), element_order_less);

  const LineFamily actual = all_closure_lines(h);
  const LineFamily predicted(n, lay.predicted_closure_lines);
  self_check(predicted.count() == lay.predicted_closure_lines.size(), "sandwich: predicted closure-lines collide");
  self_check(actual == predicted, "sandwich: closure-lines differ from the three predicted families");
  self_check(actual.max_line_size() <= k, "sandwich: closure-line larger than k");
  self_check(actual.count() == lay.core_closure_lines.size() + static_cast<std::size_t>(binomial(p, 2) + p),
             "sandwich: closure-line count recursion");
  if (layout) *layout = std::move(lay);
  return h;
}

std::int64_t packing_line_count(int n, int k, std::int64_t edges) {
  return edges + (binomial(n, 2) - edges * binomial(k, 2));
}

Hypergraph greedy_packing(int n, int k) {
  require_params(k >= 2 && n >= k, "packing needs n >= k >= 2");
  require_fits(n);
  if (binomial(n, k) > 50'000'000) throw Error(Errc::TooLarge, "packing: too many k-subsets to scan");

  std::vector<std::vector<bool>> covered(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<VertexSet> edges;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    bool free = true;
    for (int a = 0; a < k && free; ++a)
      for (int b = a + 1; b < k && free; ++b) free = !covered[comb[a]][comb[b]];
    if (free) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) covered[comb[a]][comb[b]] = true;
      edges.push_back(VertexSet::of(comb));
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  Hypergraph h(n, edges);

  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      self_check((edges[a] & edges[b]).size() <= 1, "packing: two edges share a pair");
  const LineReport report = all_lines_hg(h);
  for (VertexSet l : report.family.lines()) {
    const bool is_edge = std::binary_search(h.edges().begin(), h.edges().end(), l, element_order_less);
    const bool bare_pair = l.size() == 2 && std::none_of(edges.begin(), edges.end(), [&](VertexSet e) { return e.contains(l); });
    self_check(is_edge || bare_pair, "packing: line is neither an edge nor an uncovered pair");
  }
  self_check(static_cast<std::int64_t>(report.count) ==
                 packing_line_count(n, k, static_cast<std::int64_t>(h.edges().size())),
             "packing: line count formula");
  return h;
}

}  // namespace linespace
