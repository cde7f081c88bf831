#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace weylkl {

// Fixed-size bitset sized at runtime; just enough for closure rows.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }

  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  bool operator==(const DynBitset&) const = default;

  template <class F>
  void for_each_set(F f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w != 0) {
        unsigned b = std::countr_zero(w);
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace weylkl
