#ifndef LIBSORT_GAPPED_ARRAY_HPP
#define LIBSORT_GAPPED_ARRAY_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "libsort/metrics.hpp"

namespace libsort {

// Fixed-capacity sparse ordered array. Occupied slots, read left to right,
// hold a nondecreasing key sequence; empty slots (gaps) absorb the shifting
// done by insertions. All occupied slots live in [0, prefix_length()), the
// live prefix, which only changes on rebalance().
//
// locate() binary-searches directly over the gapped prefix rather than over
// recorded support positions: an empty probe is resolved by scanning left to
// the nearest occupied slot, and a fully empty left segment sends the search
// right. Cost is O(log prefix) comparisons plus the gap runs touched.
template <typename Key, typename Compare = std::less<Key>>
class GappedArray {
 public:
  explicit GappedArray(std::size_t capacity, Compare compare = Compare())
      : slots_(check_capacity(capacity)),
        occupied_(capacity, 0),
        less_(std::move(compare)) {}

  std::size_t capacity() const { return slots_.size(); }
  std::size_t size() const { return count_; }
  std::size_t prefix_length() const { return prefix_len_; }

  bool occupied(std::size_t slot) const { return occupied_[slot] != 0; }

  const Key& key_at(std::size_t slot) const {
    assert(occupied_[slot]);
    return slots_[slot];
  }

  // Smallest slot index where `key` can be placed (shifting the occupied run
  // at that slot one step right) without breaking order. Equal keys land
  // after the existing ones. Key comparisons performed are added to
  // `metrics.comparisons`.
  std::size_t locate(const Key& key, SortMetrics& metrics) const {
    std::size_t lo = 0;
    std::size_t hi = prefix_len_;
    std::size_t result = 0;  // one past the last occupied slot with key <= `key`
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      std::size_t probe = mid;
      while (!occupied_[probe] && probe > lo) --probe;
      if (!occupied_[probe]) {
        // [lo, mid] is all gaps; anything decisive is right of mid.
        lo = mid + 1;
        continue;
      }
      ++metrics.comparisons;
      if (!less_(key, slots_[probe])) {  // slots_[probe] <= key
        result = probe + 1;
        lo = mid + 1;
      } else {
        hi = probe;
      }
    }
    return result;
  }

  // Place `key` at `slot`, shifting the occupied run starting there one step
  // right into the nearest gap. Returns the number of elements moved, or
  // nullopt when no gap exists at or right of `slot` inside the prefix; the
  // caller is expected to rebalance and retry.
  std::optional<std::size_t> insert_at(std::size_t slot, const Key& key,
                                       SortMetrics& metrics) {
    assert(slot <= prefix_len_);
    std::size_t gap = slot;
    while (gap < prefix_len_ && occupied_[gap]) ++gap;
    if (gap == prefix_len_) return std::nullopt;
    const std::size_t shift = gap - slot;
    std::move_backward(slots_.begin() + static_cast<std::ptrdiff_t>(slot),
                       slots_.begin() + static_cast<std::ptrdiff_t>(gap),
                       slots_.begin() + static_cast<std::ptrdiff_t>(gap + 1));
    occupied_[gap] = 1;
    slots_[slot] = key;
    ++count_;
    metrics.shift_moves += shift;
    if (shift > metrics.max_shift) metrics.max_shift = shift;
    return shift;
  }

  // Spread the current keys evenly over the first `target_prefix` slots: the
  // key of rank j moves to slot floor(j * target_prefix / count), which keeps
  // order and leaves no two keys adjacent whenever target_prefix >= 2*count.
  // Returns the number of keys whose slot changed; the same amount is added
  // to `metrics.rebalance_moves`.
  std::size_t rebalance(std::size_t target_prefix, SortMetrics& metrics) {
    if (target_prefix < count_)
      throw std::invalid_argument(
          "GappedArray::rebalance: target prefix smaller than element count");
    if (target_prefix > capacity())
      throw std::length_error(
          "GappedArray::rebalance: target prefix exceeds capacity");

    scratch_.clear();
    scratch_.reserve(count_);
    for (std::size_t s = 0; s < prefix_len_; ++s) {
      if (occupied_[s]) scratch_.emplace_back(s, std::move(slots_[s]));
    }
    std::fill(occupied_.begin(),
              occupied_.begin() + static_cast<std::ptrdiff_t>(prefix_len_), 0);

    std::size_t moved = 0;
    for (std::size_t j = 0; j < scratch_.size(); ++j) {
      const std::size_t dest = j * target_prefix / count_;
      slots_[dest] = std::move(scratch_[j].second);
      occupied_[dest] = 1;
      if (dest != scratch_[j].first) ++moved;
    }
    scratch_.clear();
    prefix_len_ = target_prefix;
    metrics.rebalance_moves += moved;
    return moved;
  }

  // Occupied keys, left to right. Nondecreasing by construction.
  std::vector<Key> compact() const {
    std::vector<Key> keys;
    keys.reserve(count_);
    for (std::size_t s = 0; s < prefix_len_; ++s) {
      if (occupied_[s]) keys.push_back(slots_[s]);
    }
    return keys;
  }

 private:
  static std::size_t check_capacity(std::size_t capacity) {
    if (capacity == 0)
      throw std::invalid_argument("GappedArray: capacity must be >= 1");
    return capacity;
  }

  std::vector<Key> slots_;
  std::vector<std::uint8_t> occupied_;
  std::vector<std::pair<std::size_t, Key>> scratch_;  // reused by rebalance
  std::size_t count_ = 0;
  std::size_t prefix_len_ = 0;
  Compare less_;
};

}  // namespace libsort

#endif  // LIBSORT_GAPPED_ARRAY_HPP
