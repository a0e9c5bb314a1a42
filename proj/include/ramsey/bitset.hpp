#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace ramsey {

// dynamic bitset over 64-bit words; binary operations require equal capacity
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // set difference
  Bitset& subtract(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  // complement within the capacity
  Bitset complement() const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  bool operator==(const Bitset&) const = default;

  // first set bit, -1 if none
  int find_first() const { return scan_from(0); }
  // first set bit strictly above i, -1 if none
  int find_next(int i) const { return scan_from(i + 1); }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator(const Bitset* bs, int bit) : bs_(bs), bit_(bit) {}
    int operator*() const { return bit_; }
    const_iterator& operator++() {
      bit_ = bs_->find_next(bit_);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return bit_ != o.bit_; }

   private:
    const Bitset* bs_;
    int bit_;
  };
  const_iterator begin() const { return {this, find_first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  void trim() {
    if (nbits_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }
  int scan_from(int start) const {
    if (start >= nbits_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ramsey
