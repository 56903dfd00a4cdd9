#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace smallworld {

// 64-bit finalizer used to derive independent seed streams from a base seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return mix64(base ^ mix64(salt));
}

// Deterministic generator with fully specified draw mappings. The standard
// <random> distributions are implementation-defined, so uniform draws are
// built directly on the mt19937_64 bit stream and reproduce bit-for-bit
// across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1), 53-bit mantissa
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // uniform integer in [0, n), rejection sampled to avoid modulo bias
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // first k entries of a Fisher-Yates pass over 0..n-1, in sampled order
  std::vector<int> sample_without_replacement(int n, int k) {
    if (n < 0 || k < 0 || k > n)
      throw std::invalid_argument("Rng::sample_without_replacement: need 0 <= k <= n");
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(ids[i], ids[j]);
    }
    ids.resize(k);
    return ids;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace smallworld
