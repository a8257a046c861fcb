#include "epsnet/point_set.hpp"

#include <cassert>
#include <stdexcept>

namespace epsnet {

PointSet::PointSet(std::size_t capacity, std::initializer_list<std::size_t> members)
    : PointSet(capacity) {
  for (auto i : members) {
    if (i >= capacity) throw std::out_of_range("point index out of range");
    set(i);
  }
}

PointSet::PointSet(std::size_t capacity, std::span<const std::size_t> members)
    : PointSet(capacity) {
  for (auto i : members) {
    if (i >= capacity) throw std::out_of_range("point index out of range");
    set(i);
  }
}

PointSet PointSet::full(std::size_t capacity) {
  PointSet s(capacity);
  for (auto& w : s.words_) w = ~word_t{0};
  if (capacity % 64 != 0 && !s.words_.empty()) s.words_.back() = (word_t{1} << (capacity % 64)) - 1;
  return s;
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t PointSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return capacity_;
}

bool PointSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::size_t PointSet::count_minus(const PointSet& other) const {
  assert(capacity_ == other.capacity_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
  return c;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator^=(const PointSet& other) {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

PointSet& PointSet::subtract(const PointSet& other) {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool PointSet::lex_less(const PointSet& other) const {
  assert(capacity_ == other.capacity_);
  // Find the lowest position where the two sets differ. Below it the sorted
  // lists agree; the set owning that position is smaller iff the other set
  // still has some element above it.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const word_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    const auto bit = static_cast<unsigned>(std::countr_zero(diff));
    const bool mine = (words_[w] >> bit) & 1U;
    const PointSet& without = mine ? other : *this;
    bool has_above = bit < 63 && (without.words_[w] >> (bit + 1)) != 0;
    for (std::size_t v = w + 1; !has_above && v < words_.size(); ++v) has_above = without.words_[v] != 0;
    return mine ? has_above : !has_above;
  }
  return false;
}

std::size_t PointSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ capacity_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace epsnet
