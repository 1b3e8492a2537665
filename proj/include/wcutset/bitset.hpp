#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace wcutset {

// Bitset over a fixed universe [0, universe). Node sets and cluster contents
// are represented this way throughout; the algorithms lean on word-parallel
// subset and intersection tests.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe)
      : size_(universe), words_(static_cast<size_t>((universe + 63) >> 6), 0) {}

  int universe() const { return size_; }

  void set(int i) {
    assert(in_range(i));
    words_[static_cast<size_t>(i >> 6)] |= bit(i);
  }
  void reset(int i) {
    assert(in_range(i));
    words_[static_cast<size_t>(i >> 6)] &= ~bit(i);
  }
  bool test(int i) const {
    assert(in_range(i));
    return words_[static_cast<size_t>(i >> 6)] & bit(i);
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Removes every element of o from this set.
  Bitset& subtract(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  int intersect_count(const Bitset& o) const {
    assert(size_ == o.size_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const Bitset&) const = default;

  // First set element, or -1 when empty.
  int find_first() const { return find_from(0); }
  // First set element strictly greater than i, or -1.
  int find_next(int i) const { return find_from(i + 1); }

  class const_iterator {
  public:
    const_iterator(const Bitset* s, int pos) : set_(s), pos_(pos) {}
    int operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->find_next(pos_);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

  private:
    const Bitset* set_;
    int pos_;
  };

  const_iterator begin() const { return {this, find_first()}; }
  const_iterator end() const { return {this, -1}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

private:
  bool in_range(int i) const { return i >= 0 && i < size_; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  int find_from(int i) const {
    if (i < 0) i = 0;
    if (i >= size_) return -1;
    size_t wi = static_cast<size_t>(i >> 6);
    std::uint64_t w = words_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi]) return (static_cast<int>(wi) << 6) + std::countr_zero(words_[wi]);
    return -1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wcutset
