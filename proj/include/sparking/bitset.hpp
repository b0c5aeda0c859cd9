#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>

namespace sparking {

/// Fixed-width bit set used as a small finite set of positions.
///
/// `Tag` only separates domains (element positions vs. set indices) at the
/// type level; the two never mix implicitly.
template <typename Word, typename Tag>
class BitSet {
 public:
  using word_type = Word;
  static constexpr std::size_t kCapacity = std::numeric_limits<Word>::digits;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr BitSet() = default;
  constexpr explicit BitSet(Word bits) : bits_(bits) {}

  static constexpr BitSet single(std::size_t pos) { return BitSet(Word{1} << pos); }
  static constexpr BitSet first(std::size_t n) {
    return n >= kCapacity ? BitSet(~Word{0}) : BitSet((Word{1} << n) - 1);
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t pos) const { return pos < kCapacity && ((bits_ >> pos) & 1U) != 0; }
  /// Lowest position in the set; undefined on an empty set.
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr std::size_t count_below(std::size_t pos) const { return (*this & first(pos)).size(); }

  constexpr BitSet with(std::size_t pos) const { return BitSet(bits_ | (Word{1} << pos)); }
  constexpr BitSet without(std::size_t pos) const { return BitSet(bits_ & ~(Word{1} << pos)); }
  constexpr bool subset_of(BitSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr BitSet operator&(BitSet a, BitSet b) { return BitSet(a.bits_ & b.bits_); }
  friend constexpr BitSet operator|(BitSet a, BitSet b) { return BitSet(a.bits_ | b.bits_); }
  friend constexpr BitSet operator^(BitSet a, BitSet b) { return BitSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr BitSet operator-(BitSet a, BitSet b) { return BitSet(a.bits_ & ~b.bits_); }
  constexpr BitSet& operator&=(BitSet b) { return *this = *this & b; }
  constexpr BitSet& operator|=(BitSet b) { return *this = *this | b; }
  constexpr BitSet& operator-=(BitSet b) { return *this = *this - b; }

  constexpr auto operator<=>(const BitSet&) const = default;

 private:
  Word bits_ = 0;
};

struct ElementTag;
struct IndexTag;

/// Set of universe positions. Position order is weight order.
using ElementSet = BitSet<std::uint64_t, ElementTag>;
/// Set of set-system indices (0-based).
using IndexSet = BitSet<std::uint32_t, IndexTag>;

}  // namespace sparking
