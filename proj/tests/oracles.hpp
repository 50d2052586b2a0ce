// Test-side oracles, independent of the library code paths they check.
#ifndef LIBSORT_TESTS_ORACLES_HPP
#define LIBSORT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "libsort/rng.hpp"

namespace oracles {

// Inversion count via merge sort, O(n log n). Counts pairs i < j with
// a[i] > a[j]; equal keys are not inversions.
template <typename Key>
std::uint64_t inversion_count(std::vector<Key> a) {
  std::vector<Key> buf(a.size());
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          inversions += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
      std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                buf.begin() + static_cast<std::ptrdiff_t>(hi),
                a.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

// The five benchmark input shapes, reimplemented here so tests do not
// depend on the CLI's generator.
enum class Dist { kRandom, kSorted, kReversed, kFewDistinct, kNearlySorted };

inline std::vector<std::int64_t> generate(Dist dist, std::size_t n,
                                          std::uint64_t seed) {
  libsort::SplitMix64 gen(seed);
  std::vector<std::int64_t> keys(n);
  switch (dist) {
    case Dist::kRandom:
      for (auto& k : keys) k = static_cast<std::int64_t>(gen.next());
      break;
    case Dist::kSorted:
      std::iota(keys.begin(), keys.end(), 0);
      break;
    case Dist::kReversed:
      for (std::size_t i = 0; i < n; ++i)
        keys[i] = static_cast<std::int64_t>(n - 1 - i);
      break;
    case Dist::kFewDistinct:
      for (auto& k : keys) k = static_cast<std::int64_t>(gen.below(16));
      break;
    case Dist::kNearlySorted: {
      std::iota(keys.begin(), keys.end(), 0);
      if (n >= 2) {
        const std::size_t swaps = (n + 99) / 100;
        for (std::size_t s = 0; s < swaps; ++s) {
          const std::size_t p = static_cast<std::size_t>(gen.below(n - 1));
          std::swap(keys[p], keys[p + 1]);
        }
      }
      break;
    }
  }
  return keys;
}

template <typename Key>
bool is_permutation_of(std::vector<Key> got, std::vector<Key> expected) {
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

}  // namespace oracles

#endif  // LIBSORT_TESTS_ORACLES_HPP
