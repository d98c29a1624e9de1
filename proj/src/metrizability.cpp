#include "linespace/metrizability.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

#include "linespace/simplex.hpp"

namespace linespace {

namespace {

int variable_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// d(x,m) + d(m,y) - d(x,y) with m the middle.
LinearRow triangle_row(int n, int x, int m, int y) {
  return LinearRow{{{variable_index(n, x, m), 1}, {variable_index(n, m, y), 1}, {variable_index(n, x, y), -1}}};
}

void require_three_uniform(const Hypergraph& h) {
  if (!h.is_three_uniform()) {
    throw Error(Errc::NotThreeUniform, "metrizability is decided for 3-uniform hypergraphs only");
  }
}

FeasibilitySystem build(const Hypergraph& h, std::span<const int> assigned) {
  require_three_uniform(h);
  const int n = h.size();
  const auto& edges = h.edges();
  if (assigned.size() > edges.size()) throw Error(Errc::BadInput, "more middles than edges");
  std::map<std::uint64_t, std::size_t> edge_index;
  for (std::size_t e = 0; e < edges.size(); ++e) edge_index.emplace(edges[e].bits(), e);

  FeasibilitySystem sys;
  sys.vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sys.pair_of_variable.emplace_back(i, j);
  for (int v = 0; v < sys.variable_count(); ++v) {
    sys.positivity.push_back(LinearRow{{{v, 1}}});
    sys.normalization.terms.emplace_back(v, 1);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const int pts[3] = {a, b, c};
        const auto it = edge_index.find(VertexSet::of({a, b, c}).bits());
        const bool is_edge = it != edge_index.end();
        const bool is_assigned = is_edge && it->second < assigned.size();
        int middle = -1;
        if (is_assigned) {
          middle = assigned[it->second];
          if (middle != a && middle != b && middle != c) {
            throw Error(Errc::BadInput, "middle " + std::to_string(middle) + " is not a vertex of edge " +
                                            std::to_string(it->second));
          }
        }
        for (int k = 0; k < 3; ++k) {
          const int m = pts[k], x = pts[(k + 1) % 3], y = pts[(k + 2) % 3];
          LinearRow row = triangle_row(n, std::min(x, y), m, std::max(x, y));
          if (!is_edge) sys.strict.push_back(std::move(row));
          else if (!is_assigned) sys.nonstrict.push_back(std::move(row));
          else if (m == middle) sys.equalities.push_back(std::move(row));
          else sys.strict.push_back(std::move(row));
        }
      }
    }
  }
  return sys;
}

lp::Constraint to_constraint(const LinearRow& row, lp::Sense sense, int slack_var, mpq_class rhs) {
  lp::Constraint c;
  for (const auto& [var, coef] : row.terms) c.terms.emplace_back(var, mpq_class(coef));
  if (slack_var >= 0) c.terms.emplace_back(slack_var, mpq_class(-1));
  c.sense = sense;
  c.rhs = std::move(rhs);
  return c;
}

std::uint64_t power_of_three(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

void check_limits(const Hypergraph& h, int limit_edges) {
  require_three_uniform(h);
  if (static_cast<int>(h.edges().size()) > limit_edges) {
    throw Error(Errc::TooLarge, std::to_string(h.edges().size()) + " edges exceed the limit of " +
                                    std::to_string(limit_edges));
  }
}

struct SearchState {
  const Hypergraph& h;
  std::uint64_t tried = 0;
  std::uint64_t solves = 0;
  std::uint64_t pruned = 0;
};

// Depth-first search below `prefix`; returns the LP solution of the first
// strictly feasible complete assignment in lexicographic order.
bool dfs(SearchState& st, std::vector<int>& prefix, StrictSolution& found) {
  const FeasibilitySystem sys = build_partial_system(st.h, prefix);
  StrictSolution sol = solve_strict(sys);
  ++st.solves;
  const std::size_t depth = prefix.size();
  if (depth == st.h.edges().size()) ++st.tried;
  if (!sol.strictly_feasible) {
    ++st.pruned;
    return false;
  }
  if (depth == st.h.edges().size()) {
    found = std::move(sol);
    return true;
  }
  for (int m : st.h.edges()[depth].to_vector()) {
    prefix.push_back(m);
    if (dfs(st, prefix, found)) return true;
    prefix.pop_back();
  }
  return false;
}

MetrizabilityResult finish(const Hypergraph& h, MetrizabilityResult r, const std::vector<int>& assignment,
                           const StrictSolution& sol) {
  r.metrizable = true;
  r.assignment = assignment;
  r.witness = witness_metric(h, sol.distances);
  return r;
}

}  // namespace

int FeasibilitySystem::pair_variable(int i, int j) const { return variable_index(vertices, i, j); }

FeasibilitySystem build_system(const Hypergraph& h, const MiddleAssignment& assignment) {
  require_three_uniform(h);
  if (assignment.size() != h.edges().size()) {
    throw Error(Errc::BadInput, "assignment has " + std::to_string(assignment.size()) + " middles for " +
                                    std::to_string(h.edges().size()) + " edges");
  }
  return build(h, assignment);
}

FeasibilitySystem build_partial_system(const Hypergraph& h, std::span<const int> assigned) { return build(h, assigned); }

StrictSolution solve_strict(const FeasibilitySystem& system) {
  const int vars = system.variable_count();
  const int eps = vars;
  lp::Problem pb;
  pb.variables = vars + 1;
  pb.objective.assign(static_cast<std::size_t>(vars + 1), 0);
  pb.objective[static_cast<std::size_t>(eps)] = 1;
  for (const auto& row : system.equalities) pb.rows.push_back(to_constraint(row, lp::Sense::Eq, -1, 0));
  for (const auto& row : system.strict) pb.rows.push_back(to_constraint(row, lp::Sense::Ge, eps, 0));
  for (const auto& row : system.positivity) pb.rows.push_back(to_constraint(row, lp::Sense::Ge, eps, 0));
  for (const auto& row : system.nonstrict) pb.rows.push_back(to_constraint(row, lp::Sense::Ge, -1, 0));
  pb.rows.push_back(to_constraint(system.normalization, lp::Sense::Eq, -1, 1));

  const lp::Solution lps = lp::maximize(pb);
  StrictSolution out;
  out.pivots = lps.pivots;
  if (lps.status != lp::Status::Optimal) return out;
  out.slack = lps.value;
  out.strictly_feasible = sgn(lps.value) > 0;
  out.weakly_feasible = !out.strictly_feasible;
  out.distances.assign(lps.x.begin(), lps.x.begin() + vars);
  return out;
}

MetricSpace witness_metric(const Hypergraph& h, const std::vector<mpq_class>& distances) {
  const int n = h.size();
  if (static_cast<int>(distances.size()) != n * (n - 1) / 2) throw Error(Errc::BadInput, "wrong number of distances");
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const mpq_class& q = distances[static_cast<std::size_t>(variable_index(n, i, j))];
      if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
        throw Error(Errc::Overflow, "witness distance " + q.get_str() + " exceeds 64-bit range");
      }
      dist[i][j] = dist[j][i] = Rational(q.get_num().get_si(), q.get_den().get_si());
    }
  }
  MetricSpace w = validate_metric(dist, h.labels());
  auto got = betweenness_set(w);
  auto want = h.edges();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) throw Error(Errc::SelfCheckFailed, "witness betweenness set differs from the hypergraph");
  return w;
}

MetrizabilityResult check_metrizable(const Hypergraph& h, const MetrizabilityOptions& options) {
  check_limits(h, options.limit_edges);
  const std::size_t edge_count = h.edges().size();
  const int threads = std::max(options.threads, 1);
  MetrizabilityResult result;

  if (threads == 1 || edge_count == 0) {
    SearchState st{h};
    std::vector<int> prefix;
    StrictSolution found;
    const bool ok = dfs(st, prefix, found);
    result.assignments_tried = st.tried;
    result.lp_solves = st.solves;
    result.pruned_subtrees = st.pruned;
    return ok ? finish(h, result, prefix, found) : result;
  }

  // Split into 3^depth lexicographically ordered subtrees; the lowest-index
  // subtree with a witness wins, so the answer matches the serial search.
  std::size_t depth = 0;
  while (depth < edge_count && power_of_three(depth) < static_cast<std::uint64_t>(8 * threads)) ++depth;
  const auto subtrees = static_cast<std::int64_t>(power_of_three(depth));
  std::atomic<std::int64_t> winner{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::vector<int>> prefixes(static_cast<std::size_t>(subtrees));
  std::vector<StrictSolution> solutions(static_cast<std::size_t>(subtrees));
  std::vector<SearchState> states(static_cast<std::size_t>(subtrees), SearchState{h});

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t s = 0; s < subtrees; ++s) {
    if (s > winner.load()) continue;
    auto& prefix = prefixes[static_cast<std::size_t>(s)];
    std::int64_t code = s;
    std::vector<int> digits(depth);
    for (std::size_t d = depth; d-- > 0;) {
      digits[d] = static_cast<int>(code % 3);
      code /= 3;
    }
    for (std::size_t d = 0; d < depth; ++d) prefix.push_back(h.edges()[d].to_vector()[static_cast<std::size_t>(digits[d])]);
    if (dfs(states[static_cast<std::size_t>(s)], prefix, solutions[static_cast<std::size_t>(s)])) {
      std::int64_t cur = winner.load();
      while (s < cur && !winner.compare_exchange_weak(cur, s)) {
      }
    }
  }
  for (const auto& st : states) {
    result.assignments_tried += st.tried;
    result.lp_solves += st.solves;
    result.pruned_subtrees += st.pruned;
  }
  result.counts_approximate = true;
  const std::int64_t w = winner.load();
  if (w == std::numeric_limits<std::int64_t>::max()) return result;
  return finish(h, result, prefixes[static_cast<std::size_t>(w)], solutions[static_cast<std::size_t>(w)]);
}

MetrizabilityResult check_metrizable_reference(const Hypergraph& h, int limit_edges) {
  check_limits(h, limit_edges);
  const auto& edges = h.edges();
  MetrizabilityResult result;
  const std::uint64_t total = power_of_three(edges.size());
  MiddleAssignment assignment(edges.size());
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t code = index;
    for (std::size_t e = edges.size(); e-- > 0;) {
      assignment[e] = edges[e].to_vector()[code % 3];
      code /= 3;
    }
    const StrictSolution sol = solve_strict(build_system(h, assignment));
    ++result.assignments_tried;
    ++result.lp_solves;
    if (sol.strictly_feasible) return finish(h, result, assignment, sol);
  }
  return result;
}

}  // namespace linespace
