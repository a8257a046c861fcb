#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace epsnet {

/// Fixed-capacity bit vector over the ground set {0, ..., capacity-1}.
///
/// Ranges, traces, samples and candidate nets are all PointSets. Binary
/// operations require equal capacities.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  PointSet(std::size_t capacity, std::initializer_list<std::size_t> members);
  PointSet(std::size_t capacity, std::span<const std::size_t> members);

  static PointSet full(std::size_t capacity);

  [[nodiscard]] std::size_t capacity() const { return capacity_; }

  void set(std::size_t i) { words_[i >> 6] |= word_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(word_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= word_t{1} << (i & 63); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  [[nodiscard]] std::size_t count() const;
  /// Smallest member, or capacity() when empty.
  [[nodiscard]] std::size_t first() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool intersects(const PointSet& other) const;
  [[nodiscard]] bool is_subset_of(const PointSet& other) const;
  /// |this \ other|
  [[nodiscard]] std::size_t count_minus(const PointSet& other) const;

  PointSet& operator&=(const PointSet& other);
  PointSet& operator|=(const PointSet& other);
  PointSet& operator^=(const PointSet& other);
  /// this \= other
  PointSet& subtract(const PointSet& other);

  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator^(PointSet a, const PointSet& b) { return a ^= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

  /// Ascending member indices.
  [[nodiscard]] std::vector<std::size_t> indices() const;

  /// Calls fn(i) for each member in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// Order of the sorted member lists, compared lexicographically
  /// ({0} < {0,1} < {1}).
  [[nodiscard]] bool lex_less(const PointSet& other) const;

  [[nodiscard]] std::size_t hash() const;

  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

 private:
  using word_t = std::uint64_t;
  std::size_t capacity_ = 0;
  std::vector<word_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

struct PointSetLexLess {
  bool operator()(const PointSet& a, const PointSet& b) const { return a.lex_less(b); }
};

}  // namespace epsnet
