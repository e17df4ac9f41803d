#include "sumstruct/util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumstruct {

std::vector<long long> Rng::pick_k_of_n(long long n, long long k) {
  if (k < 0 || k > n) throw std::invalid_argument("pick_k_of_n needs 0 <= k <= n");
  std::vector<long long> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0LL);
  // Partial Fisher-Yates: settle the first k slots.
  for (long long i = 0; i < k; ++i) {
    const long long j = i + static_cast<long long>(below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace sumstruct
