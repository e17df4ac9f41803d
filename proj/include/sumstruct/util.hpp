#pragma once
// Deterministic randomness helpers. std::mt19937_64's raw output sequence is
// fully specified by the standard, so seeded runs are byte-identical across
// platforms as long as we avoid the implementation-defined <random>
// distributions. The modulo bias is irrelevant at the scales used here.

#include <cstdint>
#include <random>
#include <vector>

namespace sumstruct {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // Uniform-ish value in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() & 1U) != 0; }

  // k distinct values from {0,...,n-1}, ascending.
  std::vector<long long> pick_k_of_n(long long n, long long k);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sumstruct
