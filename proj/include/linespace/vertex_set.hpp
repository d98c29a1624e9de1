#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace linespace {

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet pair(int u, int v) { return VertexSet((std::uint64_t{1} << u) | (std::uint64_t{1} << v)); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool contains(VertexSet o) const noexcept { return (o.bits_ & ~bits_) == 0; }
  constexpr void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by their sorted element lists, which is how reports list them.
inline bool element_order_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    const int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace linespace

template <>
struct std::hash<linespace::VertexSet> {
  std::size_t operator()(linespace::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
