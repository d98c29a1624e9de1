#pragma once

#include <cstddef>
#include <vector>

#include "linespace/vertex_set.hpp"

namespace linespace {

/// Distinct lines (or closure-lines) over a ground set of `ground_size`
/// vertices. Members are kept sorted in element order and deduplicated.
class LineFamily {
 public:
  LineFamily() = default;
  LineFamily(int ground_size, std::vector<VertexSet> lines);

  int ground_size() const noexcept { return ground_size_; }
  const std::vector<VertexSet>& lines() const noexcept { return lines_; }
  std::size_t count() const noexcept { return lines_.size(); }
  int max_line_size() const noexcept;
  bool has_universal_line() const noexcept;
  bool contains(VertexSet line) const;

  friend bool operator==(const LineFamily&, const LineFamily&) = default;

 private:
  int ground_size_ = 0;
  std::vector<VertexSet> lines_;
};

/// For each vertex x, the set S_x of lines through x must be pairwise
/// incomparable when no line is universal. Returns false on the first
/// comparable pair.
bool lines_through_vertices_form_antichain(const LineFamily& family);

}  // namespace linespace
