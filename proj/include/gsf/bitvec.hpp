// Copyright 2026 The gsf developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace gsf {

// Fixed-width bitset packed into 64-bit words. Bit indices are 0-based.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  int popcount() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  void xor_with(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  void and_with(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  }
  void or_with(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  }
  void andnot_with(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  }

  int popcount_and(const BitVec& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }
  bool intersects(const BitVec& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const BitVec& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  // First set bit, or -1 when empty.
  int find_first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k) * 64 + std::countr_zero(w_[k]);
    return -1;
  }

  // First set bit at index >= i, or -1.
  int find_next(int i) const {
    if (i >= n_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t word = w_[k] & (~std::uint64_t(0) << (i & 63));
    while (true) {
      if (word) return int(k) * 64 + std::countr_zero(word);
      if (++k == w_.size()) return -1;
      word = w_[k];
    }
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t word = w_[k];
      while (word) {
        f(int(k) * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<int> set_bits() const {
    std::vector<int> out;
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_words(std::uint64_t seed, const std::vector<std::uint64_t>& ws) {
  std::uint64_t h = splitmix64(seed ^ (ws.size() * 0x9e3779b97f4a7c15ULL));
  for (auto w : ws) h = splitmix64(h ^ w);
  return h;
}

}  // namespace gsf
