#ifndef LIBSORT_LIBRARY_SORT_HPP
#define LIBSORT_LIBRARY_SORT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "libsort/gapped_array.hpp"
#include "libsort/metrics.hpp"
#include "libsort/rng.hpp"

namespace libsort {

// Tunables for one library-sort run. epsilon sets the spreading factor
// 2+2*epsilon that every rebalance applies; c sizes the analysis windows
// derived from the run and has no effect on the sort itself.
struct SortParams {
  double epsilon = 1.0;
  double c = 4.0;
  std::uint64_t seed = 0;
  bool shuffle = true;
};

template <typename Key>
struct SortResult {
  std::vector<Key> sorted;
  SortMetrics metrics;
  std::vector<RoundLabeling> labelings;
};

// Uniform random permutation of `input` under a fixed seed.
template <typename Key>
std::vector<Key> shuffle(std::vector<Key> input, std::uint64_t seed) {
  SplitMix64 gen(seed);
  fisher_yates(input, gen);
  return input;
}

// Element counts after which a rebalance fires: every power of two below n,
// including the bootstrap boundary at 1. The final insertion is never
// followed by a rebalance; compaction subsumes it.
inline std::vector<std::size_t> round_boundaries(std::size_t n) {
  std::vector<std::size_t> boundaries;
  for (std::size_t b = 1; b < n; b *= 2) boundaries.push_back(b);
  return boundaries;
}

namespace detail {

// Prefix length that spreads `count` elements with factor 2+2*epsilon.
inline std::size_t spread_prefix(double epsilon, std::size_t count) {
  return static_cast<std::size_t>((2.0 + 2.0 * epsilon) *
                                  static_cast<double>(count));
}

// Key plus its position in the arrival permutation, so end-of-round
// snapshots can tell support from intercalated elements even among
// duplicate keys. Ordering looks at the key only.
template <typename Key>
struct Arrival {
  Key key;
  std::uint64_t order;
};

}  // namespace detail

// Gapped insertion sort. Shuffles the input (seeded), inserts elements into
// a sparse array in rounds that double, rebalances at round boundaries with
// spreading factor 2+2*epsilon, and compacts at the end. Returns the sorted
// keys, the move/comparison counters, and one support/intercalated labeling
// per completed round.
template <typename Key, typename Compare = std::less<Key>>
SortResult<Key> library_sort(std::vector<Key> input, const SortParams& params,
                             Compare compare = Compare()) {
  if (!(params.epsilon > 0.0))
    throw std::invalid_argument("library_sort: epsilon must be > 0");
  if (!(params.c > 0.0))
    throw std::invalid_argument("library_sort: c must be > 0");

  SortResult<Key> result;
  SortMetrics& m = result.metrics;
  m.seed = params.seed;
  m.generator = std::string(kGeneratorId);

  const std::size_t n = input.size();
  if (n == 0) return result;

  if (params.shuffle) {
    SplitMix64 gen(params.seed);
    fisher_yates(input, gen);
  }

  using Item = detail::Arrival<Key>;
  const auto item_less = [&compare](const Item& a, const Item& b) {
    return compare(a.key, b.key);
  };
  GappedArray<Item, decltype(item_less)> array(
      detail::spread_prefix(params.epsilon, n) + 1, item_less);

  const auto sqrt_prefix = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));

  std::size_t round_index = 0;
  std::size_t round_start = 0;  // element count when the current round began
  std::size_t next_boundary = 1;
  std::uint64_t round_max_shift = 0;
  RoundStats base;  // metric totals at round start

  const auto close_round = [&](std::size_t count_now) {
    RoundStats rs;
    rs.round_index = round_index;
    rs.elements_at_end = count_now;
    rs.comparisons = m.comparisons - base.comparisons;
    rs.shift_moves = m.shift_moves - base.shift_moves;
    rs.rebalance_moves = m.rebalance_moves - base.rebalance_moves;
    rs.emergency_rebalances = m.emergency_rebalances - base.emergency_rebalances;
    rs.max_shift = round_max_shift;
    m.per_round.push_back(rs);
    base.comparisons = m.comparisons;
    base.shift_moves = m.shift_moves;
    base.rebalance_moves = m.rebalance_moves;
    base.emergency_rebalances = m.emergency_rebalances;
    round_max_shift = 0;
  };

  const auto capture_labeling = [&](std::size_t count_now, bool full) {
    RoundLabeling lab;
    lab.round_index = round_index;
    lab.support_count = round_start;
    lab.intercalated_count = count_now - round_start;
    lab.full = full;
    const auto items = array.compact();
    lab.tags.reserve(items.size());
    for (const Item& item : items)
      lab.tags.push_back(item.order < round_start ? 1 : 0);
    result.labelings.push_back(std::move(lab));
  };

  // Bootstrap: size the live prefix for the first element.
  array.rebalance(detail::spread_prefix(params.epsilon, 1), m);

  std::size_t inserted = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Item item{std::move(input[idx]), static_cast<std::uint64_t>(idx)};
    for (;;) {
      const std::size_t slot = array.locate(item, m);
      if (const auto shift = array.insert_at(slot, item, m)) {
        if (*shift > round_max_shift) round_max_shift = *shift;
        break;
      }
      // No gap right of the target position: respread the current elements
      // over a prefix sized for the current count, then try again.
      ++m.emergency_rebalances;
      array.rebalance(detail::spread_prefix(params.epsilon, array.size()), m);
    }
    ++inserted;

    if (inserted == sqrt_prefix) {
      m.sqrt_prefix_insertions = inserted;
      m.sqrt_prefix_comparisons = m.comparisons;
      m.sqrt_prefix_shift_moves = m.shift_moves;
    }

    if (inserted == next_boundary) {
      // Round ends here: snapshot support/intercalated labels first, then
      // rebalance (skipped after the final element), then close the books.
      if (round_index >= 1) capture_labeling(inserted, true);
      if (inserted < n)
        array.rebalance(detail::spread_prefix(params.epsilon, inserted), m);
      close_round(inserted);
      ++round_index;
      round_start = inserted;
      next_boundary *= 2;
    }
  }

  if (inserted > round_start) {
    // Partial final round: n is not a power of two. No rebalance; the
    // labeling records actual counts and is marked not-full.
    if (round_index >= 1) capture_labeling(inserted, false);
    close_round(inserted);
  }

  auto items = array.compact();
  result.sorted.reserve(items.size());
  for (Item& item : items) result.sorted.push_back(std::move(item.key));
  return result;
}

}  // namespace libsort

#endif  // LIBSORT_LIBRARY_SORT_HPP
