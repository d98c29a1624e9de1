#include "linespace/line_family.hpp"

#include <algorithm>

namespace linespace {

LineFamily::LineFamily(int ground_size, std::vector<VertexSet> lines)
    : ground_size_(ground_size), lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end(), element_order_less);
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

int LineFamily::max_line_size() const noexcept {
  int best = 0;
  for (VertexSet l : lines_) best = std::max(best, l.size());
  return best;
}

bool LineFamily::has_universal_line() const noexcept {
  const VertexSet all = VertexSet::full(ground_size_);
  return std::any_of(lines_.begin(), lines_.end(), [&](VertexSet l) { return l == all; });
}

bool LineFamily::contains(VertexSet line) const {
  return std::binary_search(lines_.begin(), lines_.end(), line, element_order_less);
}

bool lines_through_vertices_form_antichain(const LineFamily& family) {
  const int n = family.ground_size();
  const auto& lines = family.lines();
  std::vector<std::vector<bool>> through(static_cast<std::size_t>(n), std::vector<bool>(lines.size()));
  for (std::size_t li = 0; li < lines.size(); ++li) {
    lines[li].for_each([&](int x) { through[static_cast<std::size_t>(x)][li] = true; });
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool subset = true;
      for (std::size_t li = 0; li < lines.size() && subset; ++li) {
        if (through[static_cast<std::size_t>(x)][li] && !through[static_cast<std::size_t>(y)][li]) subset = false;
      }
      if (subset) return false;
    }
  }
  return true;
}

}  // namespace linespace
