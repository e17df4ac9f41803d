#pragma once
// Minimal dense bit vector used for set membership caches, sumset convolution
// and link-graph adjacency rows. Kept deliberately small: fixed width chosen at
// construction, 64-bit words, no dynamic growth.

#include <cstdint>
#include <vector>

namespace sumstruct {

struct BitVec {
  std::vector<std::uint64_t> w;
  std::size_t nbits = 0;

  BitVec() = default;
  explicit BitVec(std::size_t n) : w((n + 63) / 64, 0), nbits(n) {}

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  // this |= other << shift (bit positions beyond nbits are dropped).
  void or_shifted(const BitVec& other, std::size_t shift) {
    const std::size_t ws = shift >> 6, bs = shift & 63;
    for (std::size_t i = 0; i < other.w.size(); ++i) {
      const std::uint64_t x = other.w[i];
      if (!x) continue;
      if (i + ws < w.size()) w[i + ws] |= x << bs;
      if (bs && i + ws + 1 < w.size()) w[i + ws + 1] |= x >> (64 - bs);
    }
    trim();
  }

  // this |= other rotated left by r within a cyclic universe of nbits positions.
  void or_rotated(const BitVec& other, std::size_t r) {
    for (std::size_t i = 0; i < other.nbits; ++i)
      if (other.test(i)) set((i + r) % nbits);
  }

  void clear() { std::fill(w.begin(), w.end(), 0); }

 private:
  void trim() {
    const std::size_t tail = nbits & 63;
    if (tail && !w.empty()) w.back() &= (std::uint64_t(1) << tail) - 1;
  }
};

}  // namespace sumstruct
