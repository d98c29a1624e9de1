#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linespace/hypergraph.hpp"
#include "linespace/line_family.hpp"
#include "linespace/metric.hpp"

namespace linespace {

// Builders for the explicit objects of the line/closure-line theory. Each
// builder re-verifies the properties it is supposed to have and throws
// Errc::SelfCheckFailed if they do not hold.

/// u,v,x,y,z on a 5-cycle: adjacent points at distance 1, the rest at 2.
MetricSpace pentagon();

/// Seven edges {i, i+1, i+3} mod 7.
Hypergraph fano();

/// Strings over {0..a-1} of length `length` stored little-endian per position.
using Word = std::vector<int>;

/// `count` distinct words such that every position has two words that differ
/// there: the all-0 and all-(a-1) words first, then lexicographic fill.
std::vector<Word> choose_strings(std::int64_t count, int length, int alphabet);

struct Lemma2Layout {
  int ell = 0;
  int alphabet = 0;
  std::vector<Word> words;  // words[j] labels vertex ell + j
};

/// Vertices P = {0..ell-1} and S = {ell..n-1}; edges P, S and every
/// E_ix = {i} + {s in S : s_i = x} with at least two vertices.
Hypergraph lemma2_construction(int n, int ell, int alphabet, Lemma2Layout* layout = nullptr);

/// 2^ell + ell*a.
std::int64_t lemma2_bound(int ell, int alphabet);

struct Thm3Params {
  int ell = 0;
  std::int64_t alphabet = 0;
};

/// ell = ceil(sqrt(ln n / ln beta)), a = floor(gamma^ell) with beta = 3/2 and
/// gamma = 19/10, all decided in exact integer arithmetic.
Thm3Params thm3_params(std::int64_t n);

/// L1 metric on x1=(1,3), x2=(2,4), x3=(3,1), x4=(4,2), xk=(k, n+5-k).
MetricSpace thm5_space(int n);

class OneFactorization {
 public:
  explicit OneFactorization(int p);

  int p() const noexcept { return p_; }
  /// Color in 1..p-1 of the edge {i,j}, vertices 1-based.
  int color(int i, int j) const { return color_[static_cast<std::size_t>((i - 1) * p_ + (j - 1))]; }
  /// The j with color(i, j) == w.
  int partner(int i, int w) const;
  bool is_valid() const;

 private:
  int p_;
  std::vector<int> color_;
};

/// Circle method: vertex p fixed, rotate 1..p-1.
OneFactorization round_robin_factorization(int p);

struct SandwichLayout {
  int n = 0;
  int k = 0;
  int p = 0;
  VertexSet core;                // X0, |X0| = p - 1
  std::vector<VertexSet> parts;  // V1..Vp
  std::vector<int> core_vertex;  // the vertex of X0 playing color w, index w-1
  std::vector<VertexSet> core_closure_lines;  // closure-lines of (X0, H0)
  /// Closure-lines predicted by the construction: the core family, every
  /// Vi + Vj + phi(i,j), and every Vi.
  std::vector<VertexSet> predicted_closure_lines;
};

/// Recursive hypergraph whose closure-lines all have at most k vertices.
Hypergraph sandwich_construction(int n, int k, SandwichLayout* layout = nullptr);

/// k-uniform packing built greedily over k-subsets in lexicographic order.
Hypergraph greedy_packing(int n, int k);

/// |H| + (C(n,2) - |H| C(k,2)): the line count of any k-uniform packing.
std::int64_t packing_line_count(int n, int k, std::int64_t edges);

std::int64_t binomial(std::int64_t n, std::int64_t r);

}  // namespace linespace
