#include "linespace/metric.hpp"

#include <queue>

namespace linespace {

namespace {

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<std::string> default_labels(std::vector<std::string> labels, int n) {
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(Errc::BadInput, "labels: expected " + std::to_string(n) + " entries, got " +
                                    std::to_string(labels.size()));
  }
  return labels;
}

}  // namespace

MetricSpace validate_metric(const std::vector<std::vector<Rational>>& matrix, std::vector<std::string> labels) {
  const int n = static_cast<int>(matrix.size());
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "at most 64 points are supported");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(Errc::BadInput, "dist: row " + std::to_string(i) + " has " +
                                      std::to_string(matrix[static_cast<std::size_t>(i)].size()) +
                                      " entries, expected " + std::to_string(n));
    }
  }
  auto at = [&](int i, int j) -> const Rational& {
    return matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0) throw Error(Errc::NonzeroDiagonal, "dist" + idx(i, i) + " = " + at(i, i).str());
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw Error(Errc::Asymmetric, "dist" + idx(i, j) + " != dist" + idx(j, i));
      if (at(i, j).sign() == 0) throw Error(Errc::ZeroOffDiagonal, "dist" + idx(i, j) + " = 0");
      if (at(i, j).sign() < 0) throw Error(Errc::NegativeDistance, "dist" + idx(i, j) + " = " + at(i, j).str());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (at(i, j) + at(j, k) < at(i, k)) {
          throw Error(Errc::TriangleViolation, "dist(" + std::to_string(i) + "," + std::to_string(k) +
                                                   ") > dist" + idx(i, j) + " + dist" + idx(j, k) +
                                                   " (i,j,k = " + std::to_string(i) + "," +
                                                   std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  MetricSpace space;
  space.n_ = n;
  space.labels_ = default_labels(std::move(labels), n);
  space.dist_.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : matrix) space.dist_.insert(space.dist_.end(), row.begin(), row.end());
  return space;
}

std::optional<int> middle_of(const MetricSpace& space, int a, int b, int c) {
  std::optional<int> middle;
  const int pts[3] = {a, b, c};
  for (int m = 0; m < 3; ++m) {
    const int mid = pts[m], x = pts[(m + 1) % 3], y = pts[(m + 2) % 3];
    if (space.dist(x, mid) + space.dist(mid, y) == space.dist(x, y)) {
      if (middle) {
        throw Error(Errc::TheoremViolated, "two middles in {" + std::to_string(a) + "," + std::to_string(b) +
                                               "," + std::to_string(c) + "}");
      }
      middle = mid;
    }
  }
  return middle;
}

std::vector<BetweennessTriple> betweenness_triples(const MetricSpace& space) {
  std::vector<BetweennessTriple> out;
  const int n = space.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const auto mid = middle_of(space, a, b, c);
        if (!mid) continue;
        if (*mid == a) out.push_back({b, a, c});
        else if (*mid == b) out.push_back({a, b, c});
        else out.push_back({a, c, b});
      }
    }
  }
  return out;
}

std::vector<VertexSet> betweenness_set(const MetricSpace& space) {
  std::vector<VertexSet> edges;
  for (const auto& t : betweenness_triples(space)) {
    edges.push_back(VertexSet::single(t.a) | VertexSet::single(t.b) | VertexSet::single(t.c));
  }
  return edges;
}

VertexSet line(const MetricSpace& space, int u, int v) {
  if (u == v) throw Error(Errc::SamePoint, "line needs two distinct points, got " + std::to_string(u) + " twice");
  const int n = space.size();
  const auto& d = [&](int i, int j) -> const Rational& { return space.dist(i, j); };
  VertexSet out = VertexSet::pair(u, v);
  for (int p = 0; p < n; ++p) {
    if (p == u || p == v) continue;
    const bool puv = d(p, u) + d(u, v) == d(p, v);  // [p u v]
    const bool upv = d(u, p) + d(p, v) == d(u, v);  // [u p v]
    const bool uvp = d(u, v) + d(v, p) == d(u, p);  // [u v p]
    if (puv || upv || uvp) out.insert(p);
  }
  return out;
}

LineFamily all_lines(const MetricSpace& space) {
  std::vector<VertexSet> lines;
  const int n = space.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) lines.push_back(line(space, u, v));
  }
  return LineFamily(n, std::move(lines));
}

MetricSpace graph_metric(const std::vector<std::vector<bool>>& adjacency, std::vector<std::string> labels) {
  const int n = static_cast<int>(adjacency.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adjacency[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(Errc::BadInput, "adjacency: row " + std::to_string(i) + " is not of length " + std::to_string(n));
    }
    if (adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) {
      throw Error(Errc::BadInput, "adjacency: loop at " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw Error(Errc::BadInput, "adjacency: not symmetric at " + idx(i, j));
      }
    }
  }
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s) {
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::queue<int> frontier;
    level[static_cast<std::size_t>(s)] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int y = 0; y < n; ++y) {
        if (adjacency[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && level[static_cast<std::size_t>(y)] < 0) {
          level[static_cast<std::size_t>(y)] = level[static_cast<std::size_t>(x)] + 1;
          frontier.push(y);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (level[static_cast<std::size_t>(t)] < 0) {
        throw Error(Errc::Disconnected, "no path between " + std::to_string(s) + " and " + std::to_string(t));
      }
      dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = Rational(level[static_cast<std::size_t>(t)]);
    }
  }
  return validate_metric(dist, std::move(labels));
}

}  // namespace linespace
