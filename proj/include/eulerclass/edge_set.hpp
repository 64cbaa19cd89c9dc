#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eulerclass {

// 0-based edge identity; the user-facing name of edge `id` is e_{id+1}.
using EdgeId = int;
using Vertex = int;

inline constexpr int kMaxEdges = 64;

// Set of edge ids backed by a single machine word.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  EdgeSet(std::initializer_list<EdgeId> ids) {
    for (EdgeId e : ids) insert(e);
  }

  static constexpr EdgeSet first(int n) {
    return EdgeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(EdgeId e) const { return (bits_ >> e) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(EdgeId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EdgeId e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr void flip(EdgeId e) { bits_ ^= std::uint64_t{1} << e; }
  constexpr EdgeSet with(EdgeId e) const {
    EdgeSet r = *this;
    r.insert(e);
    return r;
  }
  constexpr EdgeSet without(EdgeId e) const {
    EdgeSet r = *this;
    r.erase(e);
    return r;
  }

  // Smallest edge id, or -1 when empty.
  constexpr EdgeId front() const { return bits_ ? std::countr_zero(bits_) : -1; }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(static_cast<EdgeId>(std::countr_zero(b)));
  }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator^(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ ^ b.bits_); }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  constexpr EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  constexpr EdgeSet& operator^=(EdgeSet o) { bits_ ^= o.bits_; return *this; }
  constexpr EdgeSet& operator-=(EdgeSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;

  // Lexicographic comparison of the sorted id sequences.
  friend std::strong_ordering lex_compare(EdgeSet a, EdgeSet b) {
    while (a.bits_ != 0 && b.bits_ != 0) {
      EdgeId x = a.front(), y = b.front();
      if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
      a.erase(x);
      b.erase(y);
    }
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    return a.bits_ == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Maps a set over `universe` (ids listed ascending) to/from a dense mask
// where bit j stands for universe[j].
inline std::uint64_t compress(EdgeSet s, const std::vector<EdgeId>& universe) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < universe.size(); ++j)
    if (s.contains(universe[j])) out |= std::uint64_t{1} << j;
  return out;
}

inline EdgeSet expand(std::uint64_t mask, const std::vector<EdgeId>& universe) {
  EdgeSet out;
  for (std::size_t j = 0; j < universe.size(); ++j)
    if ((mask >> j) & 1U) out.insert(universe[j]);
  return out;
}

}  // namespace eulerclass
