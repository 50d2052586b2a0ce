#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "libsort/library_sort.hpp"
#include "oracles.hpp"

using libsort::SortParams;
using libsort::library_sort;
using libsort::round_boundaries;

TEST_CASE("round boundaries are the powers of two below n") {
  CHECK(round_boundaries(0).empty());
  CHECK(round_boundaries(1).empty());
  CHECK(round_boundaries(2) == std::vector<std::size_t>{1});
  CHECK(round_boundaries(8) == std::vector<std::size_t>{1, 2, 4});
  CHECK(round_boundaries(10) == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("shuffle leaves empty and single-element inputs alone") {
  CHECK(libsort::shuffle(std::vector<int>{}, 1).empty());
  CHECK(libsort::shuffle(std::vector<int>{9}, 1) == std::vector<int>{9});
}

TEST_CASE("shuffle is uniform over the six permutations of three keys") {
  // 60000 seeded shuffles of [0,1,2]; each permutation should appear close
  // to 10000 times. Five sigma of a Binomial(60000, 1/6) is about 457.
  std::array<std::uint64_t, 6> counts{};
  for (std::uint64_t seed = 0; seed < 60000; ++seed) {
    const auto p = libsort::shuffle(std::vector<int>{0, 1, 2}, seed);
    const std::size_t index =
        static_cast<std::size_t>(p[0]) * 2 + (p[1] > p[2] ? 1 : 0);
    ++counts[index];
  }
  const double sigma = std::sqrt(60000.0 * (1.0 / 6.0) * (5.0 / 6.0));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(static_cast<double>(counts[i]) - 10000.0) < 5.0 * sigma);
  }
}

TEST_CASE("rejects nonpositive tuning parameters") {
  SortParams p;
  p.epsilon = 0.0;
  CHECK_THROWS_AS(library_sort(std::vector<int>{1}, p), std::invalid_argument);
  p.epsilon = -1.0;
  CHECK_THROWS_AS(library_sort(std::vector<int>{1}, p), std::invalid_argument);
  p.epsilon = 1.0;
  p.c = 0.0;
  CHECK_THROWS_AS(library_sort(std::vector<int>{1}, p), std::invalid_argument);
}

TEST_CASE("sorts trivial inputs") {
  SortParams p;
  auto empty = library_sort(std::vector<int>{}, p);
  CHECK(empty.sorted.empty());
  CHECK(empty.metrics.comparisons == 0);
  CHECK(empty.metrics.per_round.empty());
  CHECK(empty.labelings.empty());

  auto one = library_sort(std::vector<int>{5}, p);
  CHECK(one.sorted == std::vector<int>{5});
  CHECK(one.metrics.comparisons == 0);
  CHECK(one.metrics.per_round.size() == 1);
  CHECK(one.labelings.empty());
}

TEST_CASE("sorted output matches std::sort across input shapes and sizes") {
  const oracles::Dist dists[] = {
      oracles::Dist::kRandom, oracles::Dist::kSorted, oracles::Dist::kReversed,
      oracles::Dist::kFewDistinct, oracles::Dist::kNearlySorted};
  const std::size_t sizes[] = {0, 1, 2, 3, 7, 64, 100, 1000, 4096};
  std::uint64_t seed = 1;
  for (const auto dist : dists) {
    for (const auto n : sizes) {
      auto input = oracles::generate(dist, n, seed);
      auto expected = input;
      std::sort(expected.begin(), expected.end());
      SortParams p;
      p.seed = seed++;
      const auto got = library_sort(input, p);
      CAPTURE(static_cast<int>(dist));
      CAPTURE(n);
      REQUIRE(got.sorted == expected);
    }
  }
}

TEST_CASE("all-equal input sorts with zero slides") {
  SortParams p;
  p.seed = 3;
  const auto r = library_sort(std::vector<int>(100, 7), p);
  CHECK(r.sorted == std::vector<int>(100, 7));
  // Every insertion targets the slot after the rightmost 7, where a gap sits.
  CHECK(r.metrics.shift_moves == 0);
  CHECK(r.metrics.max_shift == 0);
}

TEST_CASE("sorts under a reversed comparator") {
  SortParams p;
  p.seed = 11;
  auto input = oracles::generate(oracles::Dist::kRandom, 500, 17);
  auto expected = input;
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const auto got = library_sort(input, p, std::greater<>());
  CHECK(got.sorted == expected);
}

TEST_CASE("identical seed and input give identical runs") {
  auto input = oracles::generate(oracles::Dist::kRandom, 2000, 23);
  SortParams p;
  p.seed = 99;
  const auto a = library_sort(input, p);
  const auto b = library_sort(input, p);
  CHECK(a.sorted == b.sorted);
  CHECK(a.metrics.comparisons == b.metrics.comparisons);
  CHECK(a.metrics.shift_moves == b.metrics.shift_moves);
  CHECK(a.metrics.rebalance_moves == b.metrics.rebalance_moves);
  CHECK(a.metrics.max_shift == b.metrics.max_shift);
  CHECK(a.metrics.seed == 99);
  CHECK(a.metrics.generator == "splitmix64-fy1");
}

TEST_CASE("disabling the shuffle preserves the arrival order effect") {
  // Without the shuffle, a run on already sorted keys never slides anything:
  // every insertion lands at the right edge, where a gap always follows.
  auto input = oracles::generate(oracles::Dist::kSorted, 1000, 0);
  SortParams p;
  p.shuffle = false;
  const auto r = library_sort(input, p);
  CHECK(r.sorted == input);
  CHECK(r.metrics.shift_moves == 0);
}

TEST_CASE("per-round deltas add up to the run totals") {
  auto input = oracles::generate(oracles::Dist::kRandom, 1000, 7);
  SortParams p;
  p.seed = 5;
  const auto r = library_sort(input, p);
  const auto& m = r.metrics;
  std::uint64_t comparisons = 0, shifts = 0, rebalances = 0, max_shift = 0;
  std::uint64_t emergencies = 0;
  for (const auto& round : m.per_round) {
    comparisons += round.comparisons;
    shifts += round.shift_moves;
    rebalances += round.rebalance_moves;
    emergencies += round.emergency_rebalances;
    max_shift = std::max(max_shift, round.max_shift);
  }
  CHECK(comparisons == m.comparisons);
  CHECK(shifts == m.shift_moves);
  CHECK(rebalances == m.rebalance_moves);
  CHECK(emergencies == m.emergency_rebalances);
  CHECK(max_shift == m.max_shift);
  CHECK(m.per_round.back().elements_at_end == 1000);
}

TEST_CASE("square-root prefix snapshot freezes at the right insertion") {
  auto input = oracles::generate(oracles::Dist::kRandom, 100, 9);
  SortParams p;
  p.seed = 2;
  const auto r = library_sort(input, p);
  CHECK(r.metrics.sqrt_prefix_insertions == 10);
  CHECK(r.metrics.sqrt_prefix_comparisons <= r.metrics.comparisons);
  CHECK(r.metrics.sqrt_prefix_shift_moves <= r.metrics.shift_moves);
  CHECK(r.metrics.sqrt_prefix_comparisons > 0);
}

TEST_CASE("power-of-two input yields one full labeling per doubling round") {
  auto input = oracles::generate(oracles::Dist::kRandom, 16, 4);
  SortParams p;
  p.seed = 8;
  const auto r = library_sort(input, p);
  REQUIRE(r.labelings.size() == 4);
  std::size_t expected_support = 1;
  for (const auto& lab : r.labelings) {
    CHECK(lab.full);
    CHECK(lab.support_count == expected_support);
    CHECK(lab.intercalated_count == expected_support);
    CHECK(lab.tags.size() == 2 * expected_support);
    const auto marked = static_cast<std::size_t>(
        std::count(lab.tags.begin(), lab.tags.end(), std::uint8_t{1}));
    CHECK(marked == lab.support_count);
    expected_support *= 2;
  }
}

TEST_CASE("non-power-of-two input ends with a partial labeling") {
  auto input = oracles::generate(oracles::Dist::kRandom, 10, 6);
  SortParams p;
  p.seed = 13;
  const auto r = library_sort(input, p);
  REQUIRE(r.labelings.size() == 4);
  CHECK(r.labelings[0].full);
  CHECK(r.labelings[1].full);
  CHECK(r.labelings[2].full);
  const auto& last = r.labelings.back();
  CHECK_FALSE(last.full);
  CHECK(last.support_count == 8);
  CHECK(last.intercalated_count == 2);
  CHECK(last.tags.size() == 10);
}

TEST_CASE("support tags mark exactly the keys present when the round began") {
  // With shuffle off and distinct keys, arrival order is input order, so the
  // support set of the round closing at 2m is exactly the first m arrivals.
  std::vector<int> input{4, 1, 7, 0, 5, 2, 6, 3};
  SortParams p;
  p.shuffle = false;
  const auto r = library_sort(input, p);
  REQUIRE(r.labelings.size() == 3);
  const auto& lab = r.labelings.back();  // closes at 8, support {4,1,7,0}
  REQUIRE(lab.tags.size() == 8);
  // Sorted keys are 0..7; supports at keys 0, 1, 4, 7.
  const std::vector<std::uint8_t> expected{1, 1, 0, 0, 1, 0, 0, 1};
  CHECK(lab.tags == expected);
}

TEST_CASE("gap exhaustion stays rare and recovery is bounded") {
  // The even-spreading rule anchors rank 0 at slot 0, so a round's new
  // maxima stack into the few slots after the last element; about one round
  // in sixteen runs out and takes the retry path. Per insertion that is
  // still vanishingly rare: check the per-run counts stay small and that a
  // good fraction of runs never exhaust at all.
  std::size_t zero_runs = 0;
  std::uint64_t total = 0;
  std::uint64_t worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto input = oracles::generate(oracles::Dist::kRandom, 1 << 12,
                                   libsort::derive_seed(seed, 1));
    SortParams p;
    p.seed = libsort::derive_seed(seed, 2);
    const auto r = library_sort(input, p);
    if (r.metrics.emergency_rebalances == 0) ++zero_runs;
    total += r.metrics.emergency_rebalances;
    worst = std::max(worst, r.metrics.emergency_rebalances);
  }
  CHECK(zero_runs >= 25);   // measured ~49 of 100 at this size
  CHECK(total <= 160);      // measured ~71 across 100 runs
  CHECK(worst <= 16);       // measured max 4 in any single run
}

TEST_CASE("comparisons per insertion stay within the binary search budget") {
  // The live prefix never exceeds (2+2e)n + 1 slots, so one insertion costs
  // at most about log2(4n) + 1 comparisons. Check the average with slack.
  const std::size_t n = 1 << 16;
  auto input = oracles::generate(oracles::Dist::kRandom, n, 31);
  SortParams p;
  p.seed = 37;
  const auto r = library_sort(input, p);
  const double per_insert =
      static_cast<double>(r.metrics.comparisons) / static_cast<double>(n);
  CHECK(per_insert < 2.0 * std::log2(static_cast<double>(n)));
  CHECK(per_insert > 1.0);
}
