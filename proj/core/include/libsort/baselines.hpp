#ifndef LIBSORT_BASELINES_HPP
#define LIBSORT_BASELINES_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "libsort/metrics.hpp"

namespace libsort {

template <typename Key>
struct BaselineResult {
  std::vector<Key> sorted;
  SortMetrics metrics;
};

// Classic insertion sort: linear backwards scan, one-slot slides. Equal keys
// are inserted after the existing ones. shift_moves equals the inversion
// count of the input exactly.
template <typename Key, typename Compare = std::less<Key>>
BaselineResult<Key> insertion_sort(std::vector<Key> input,
                                   Compare less = Compare()) {
  BaselineResult<Key> result{std::move(input), {}};
  auto& a = result.sorted;
  auto& m = result.metrics;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Key key = std::move(a[i]);
    std::size_t j = i;
    std::uint64_t slides = 0;
    while (j > 0) {
      ++m.comparisons;
      if (!less(key, a[j - 1])) break;  // a[j-1] <= key
      a[j] = std::move(a[j - 1]);
      --j;
      ++slides;
    }
    a[j] = std::move(key);
    m.shift_moves += slides;
    if (slides > m.max_shift) m.max_shift = slides;
  }
  return result;
}

// Insertion sort with a counted binary search for the target position.
// Slides are identical to insertion_sort on the same input; only the
// comparison count changes (at most floor(log2 i) + 1 per insertion).
template <typename Key, typename Compare = std::less<Key>>
BaselineResult<Key> binary_insertion_sort(std::vector<Key> input,
                                          Compare less = Compare()) {
  BaselineResult<Key> result{std::move(input), {}};
  auto& a = result.sorted;
  auto& m = result.metrics;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Key key = std::move(a[i]);
    // Upper bound over the sorted prefix a[0, i).
    std::size_t lo = 0;
    std::size_t len = i;
    while (len > 0) {
      const std::size_t half = len / 2;
      ++m.comparisons;
      if (less(key, a[lo + half])) {
        len = half;
      } else {
        lo += half + 1;
        len -= half + 1;
      }
    }
    const auto slides = static_cast<std::uint64_t>(i - lo);
    for (std::size_t j = i; j > lo; --j) a[j] = std::move(a[j - 1]);
    a[lo] = std::move(key);
    m.shift_moves += slides;
    if (slides > m.max_shift) m.max_shift = slides;
  }
  return result;
}

}  // namespace libsort

#endif  // LIBSORT_BASELINES_HPP
