#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace isolab {

// Position of a label in its alphabet's declared order.
using LabelIndex = std::size_t;

// Subset of a fixed finite alphabet, stored as a bitset over label indices.
// Iteration visits members in declared order.
class LabelSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = LabelIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const LabelIndex*;
    using reference = LabelIndex;

    iterator() = default;
    iterator(const LabelSet* set, std::size_t pos) : set_(set), pos_(pos) {
      seek();
    }
    LabelIndex operator*() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    void seek() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        std::uint64_t w = set_->words_[pos_ / 64] >> (pos_ % 64);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = n;
    }
    const LabelSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  LabelSet() = default;
  explicit LabelSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static LabelSet singleton(std::size_t universe, LabelIndex i) {
    LabelSet s(universe);
    s.insert(i);
    return s;
  }
  static LabelSet full(std::size_t universe) {
    LabelSet s(universe);
    for (LabelIndex i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(LabelIndex i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(LabelIndex i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool contains(LabelIndex i) const {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  LabelSet& operator|=(const LabelSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  LabelSet& operator&=(const LabelSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend LabelSet operator|(LabelSet a, const LabelSet& b) { return a |= b; }
  friend LabelSet operator&(LabelSet a, const LabelSet& b) { return a &= b; }

  // Members of *this not in o.
  LabelSet minus(const LabelSet& o) const {
    LabelSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  bool is_subset_of(const LabelSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const LabelSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  std::vector<LabelIndex> members() const { return {begin(), end()}; }

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, universe_); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace isolab
