#ifndef LIBSORT_ANALYSIS_HPP
#define LIBSORT_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "libsort/metrics.hpp"
#include "libsort/rng.hpp"

namespace libsort {

// Support/intercalated counts over nonoverlapping windows of contiguous (in
// key order) elements from one full end-of-round snapshot. A window violates
// when either count falls below threshold = floor(c * log2(m)).
struct WindowCensus {
  std::size_t m = 0;            // support count of the round
  std::size_t window_size = 0;  // w = ceil((2+epsilon) * c * log2(m))
  std::size_t threshold = 0;    // floor(c * log2(m))
  std::vector<std::pair<std::size_t, std::size_t>> windows;  // (support, intercalated)
  std::size_t violations = 0;
  std::size_t leftover = 0;  // trailing elements not covered by a full window
};

// Partitions the 2m elements of a full round into floor(2m/w) windows and
// counts each element type per window. Throws std::invalid_argument if the
// labeling is not from a full round, std::domain_error if the window does
// not fit the round (w > 2m, or m too small to size a window at all).
WindowCensus window_census(const RoundLabeling& labeling, double epsilon,
                           double c);

// Two-urn process: urn A starts with ceil(c*log2(m)) balls, urn B with the
// rest of m. Each throw adds one ball to an urn with probability
// proportional to its current count. The A-fraction is a martingale, so
// E[final a] = initial_a * (m + throws) / m.
struct UrnState {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t throws_remaining = 0;
};

UrnState urn_start(std::uint64_t m, double c, std::uint64_t throws);
void urn_step(UrnState& state, SplitMix64& gen);

// Runs the process to completion and returns the final ball count of urn A.
std::uint64_t urn_simulate(std::uint64_t m, double c, std::uint64_t throws,
                           std::uint64_t seed);

// r(eps) = (2+eps)^(2+eps) / (2^(2+eps) * (1+eps)^(1+eps)), the base of the
// per-window deficit probability bound. r(0) = 1 and r decreases as eps
// grows, which is what makes the deficit probability polynomially small.
double tail_bound_factor(double epsilon);

// P[X <= threshold] where X counts marked elements among `window` drawn
// without replacement from `total` positions of which `draws` are marked
// (hypergeometric). Exact big-integer summation of the terms.
double hypergeometric_tail(std::uint64_t total, std::uint64_t draws,
                           std::uint64_t window, std::uint64_t threshold);

struct GrowthFit {
  double exponent = 0.0;
  double r_squared = 0.0;
};

// Least-squares slope of log(cost) against log(n). Needs >= 3 points with
// positive coordinates spanning more than one n.
GrowthFit growth_fit(std::span<const std::pair<double, double>> points);

}  // namespace libsort

#endif  // LIBSORT_ANALYSIS_HPP
