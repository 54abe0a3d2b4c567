#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace geocover {

// Fixed-length bitset sized at runtime.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool all() const { return count() == n_; }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    }
    return c;
  }
  /// True when every bit of *this is set in o.
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  /// Index of the first set bit at or after i, or size() if none.
  std::size_t next(std::size_t i) const {
    if (i >= n_) return n_;
    std::size_t k = i >> 6;
    std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return std::min(n_, (k << 6) + static_cast<std::size_t>(std::countr_zero(x)));
      if (++k == w_.size()) return n_;
      x = w_[k];
    }
  }
  std::size_t first() const { return next(0); }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace geocover
