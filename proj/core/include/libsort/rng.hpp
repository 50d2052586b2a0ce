#ifndef LIBSORT_RNG_HPP
#define LIBSORT_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace libsort {

// Deterministic 64-bit generator (splitmix64). All randomness in the project
// flows through this so a run is reproducible from its seed alone, across
// platforms and standard-library versions.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t operator()() { return next(); }

  // Unbiased draw from [0, bound), bound >= 1. Rejection sampling on the
  // last partial block.
  constexpr std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x, r;
    do {
      x = next();
      r = x % bound;
    } while (x - r > ~std::uint64_t{0} - (bound - 1));
    return r;
  }
};

// Identifier stamped into emitted metrics and benchmark records. Bump it if
// the stream or the shuffle procedure ever changes.
inline constexpr std::string_view kGeneratorId = "splitmix64-fy1";

// Stable derivation of independent stream seeds from one master seed, so a
// single recorded seed can drive several uncorrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt_a,
                                    std::uint64_t salt_b = 0) {
  SplitMix64 g(master ^ (salt_a * 0x9e3779b97f4a7c15ULL) ^
               (salt_b * 0xbf58476d1ce4e5b9ULL));
  g.next();
  return g.next();
}

// In-place Fisher-Yates shuffle; uniform over all permutations.
template <typename T>
void fisher_yates(std::vector<T>& values, SplitMix64& gen) {
  if (values.size() < 2) return;
  for (std::size_t i = values.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(gen.below(i + 1));
    using std::swap;
    swap(values[i], values[j]);
  }
}

}  // namespace libsort

#endif  // LIBSORT_RNG_HPP
