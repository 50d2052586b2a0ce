#ifndef LIBSORT_METRICS_HPP
#define LIBSORT_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace libsort {

// Counter deltas for one insertion round. Round i grows the element count
// from 2^(i-1) to 2^i; round 0 covers the very first insertion. The boundary
// rebalance that closes a round is charged to that round.
struct RoundStats {
  std::size_t round_index = 0;
  std::size_t elements_at_end = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t shift_moves = 0;
  std::uint64_t rebalance_moves = 0;
  std::uint64_t max_shift = 0;
  std::uint64_t emergency_rebalances = 0;
};

// Move/comparison counters for one sort run. Wall time is measured by the
// harness, not here, so everything in this struct is machine-independent.
struct SortMetrics {
  std::uint64_t comparisons = 0;
  std::uint64_t shift_moves = 0;      // one-slot element moves during insertions
  std::uint64_t rebalance_moves = 0;  // elements whose slot changed in a rebalance
  std::uint64_t max_shift = 0;        // longest single-insertion shift run
  std::uint64_t emergency_rebalances = 0;

  std::vector<RoundStats> per_round;

  // Totals as of the first ceil(sqrt(n)) insertions, reported separately so
  // the cost of the quadratic warm-up prefix is observable on its own.
  std::uint64_t sqrt_prefix_insertions = 0;
  std::uint64_t sqrt_prefix_comparisons = 0;
  std::uint64_t sqrt_prefix_shift_moves = 0;

  // Reproducibility stamp.
  std::uint64_t seed = 0;
  std::string generator;
};

// End-of-round snapshot taken before the boundary rebalance: for each element
// in key order, whether it was already present when the round started
// (support element) or was inserted during the round (intercalated element).
// For a full round support_count == intercalated_count == 2^(i-1); the last
// round of a non-power-of-two input is partial and has full == false.
struct RoundLabeling {
  std::size_t round_index = 0;
  std::size_t support_count = 0;
  std::size_t intercalated_count = 0;
  bool full = false;
  std::vector<std::uint8_t> tags;  // tags[rank] == 1 -> support element
};

}  // namespace libsort

#endif  // LIBSORT_METRICS_HPP
