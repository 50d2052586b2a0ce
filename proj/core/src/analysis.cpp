#include "libsort/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace libsort {

WindowCensus window_census(const RoundLabeling& labeling, double epsilon,
                           double c) {
  if (!labeling.full || labeling.support_count != labeling.intercalated_count)
    throw std::invalid_argument(
        "window_census: labeling must come from a full round");
  if (epsilon < 0.0 || !(c > 0.0))
    throw std::invalid_argument("window_census: need epsilon >= 0 and c > 0");

  const std::size_t m = labeling.support_count;
  const std::size_t total = labeling.tags.size();
  assert(total == 2 * m);

  const double log2m = std::log2(static_cast<double>(m));
  WindowCensus census;
  census.m = m;
  census.window_size =
      static_cast<std::size_t>(std::ceil((2.0 + epsilon) * c * log2m));
  census.threshold = static_cast<std::size_t>(std::floor(c * log2m));
  if (census.window_size < 1 || census.window_size > total)
    throw std::domain_error(
        "window_census: window does not fit the round (m too small for "
        "chosen epsilon, c)");

  const std::size_t w = census.window_size;
  const std::size_t window_count = total / w;
  census.leftover = total - window_count * w;
  census.windows.reserve(window_count);
  for (std::size_t k = 0; k < window_count; ++k) {
    std::size_t support = 0;
    for (std::size_t r = k * w; r < (k + 1) * w; ++r) support += labeling.tags[r];
    const std::size_t intercalated = w - support;
    census.windows.emplace_back(support, intercalated);
    if (support < census.threshold || intercalated < census.threshold)
      ++census.violations;
  }
  return census;
}

UrnState urn_start(std::uint64_t m, double c, std::uint64_t throws) {
  if (m == 0) throw std::invalid_argument("urn_start: m must be >= 1");
  if (c < 0.0) throw std::invalid_argument("urn_start: c must be >= 0");
  const double clogm = c * std::log2(static_cast<double>(m));
  if (clogm > static_cast<double>(m))
    throw std::invalid_argument("urn_start: need c*log2(m) <= m");
  UrnState state;
  state.a = static_cast<std::uint64_t>(std::ceil(clogm));
  state.b = m - state.a;
  state.throws_remaining = throws;
  return state;
}

void urn_step(UrnState& state, SplitMix64& gen) {
  assert(state.throws_remaining > 0);
  if (gen.below(state.a + state.b) < state.a)
    ++state.a;
  else
    ++state.b;
  --state.throws_remaining;
}

std::uint64_t urn_simulate(std::uint64_t m, double c, std::uint64_t throws,
                           std::uint64_t seed) {
  UrnState state = urn_start(m, c, throws);
  SplitMix64 gen(seed);
  while (state.throws_remaining > 0) urn_step(state, gen);
  return state.a;
}

double tail_bound_factor(double epsilon) {
  if (epsilon < 0.0)
    throw std::invalid_argument("tail_bound_factor: epsilon must be >= 0");
  return std::pow(2.0 + epsilon, 2.0 + epsilon) /
         (std::pow(2.0, 2.0 + epsilon) * std::pow(1.0 + epsilon, 1.0 + epsilon));
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r holds binomial(n-k+i, i) after each step
  }
  return r;
}

}  // namespace

double hypergeometric_tail(std::uint64_t total, std::uint64_t draws,
                           std::uint64_t window, std::uint64_t threshold) {
  if (window > total || draws > total)
    throw std::invalid_argument(
        "hypergeometric_tail: window and draws must be <= total");

  // Feasible support counts are [max(0, window+draws-total), min(window, draws)].
  const std::uint64_t j_min =
      window + draws > total ? window + draws - total : 0;
  const std::uint64_t j_max = std::min({threshold, window, draws});
  if (j_max < j_min) return 0.0;

  cpp_int numerator = 0;
  for (std::uint64_t j = j_min; j <= j_max; ++j)
    numerator += binomial(draws, j) * binomial(total - draws, window - j);
  const cpp_int denominator = binomial(total, window);
  return cpp_rational(numerator, denominator).convert_to<double>();
}

GrowthFit growth_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("growth_fit: need at least 3 points");
  double sx = 0, sy = 0;
  double xmin = 0, xmax = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [n, cost] = points[i];
    if (!(n > 0.0) || !(cost > 0.0))
      throw std::invalid_argument("growth_fit: points must be positive");
    const double x = std::log(n);
    sx += x;
    sy += std::log(cost);
    xmin = i == 0 ? x : std::min(xmin, x);
    xmax = i == 0 ? x : std::max(xmax, x);
  }
  if (!(xmax > xmin))
    throw std::invalid_argument("growth_fit: points must span distinct n");
  // Centered accumulation; the raw-moment form loses every significant
  // digit to cancellation when the x spread is small.
  const auto k = static_cast<double>(points.size());
  const double mx = sx / k;
  const double my = sy / k;
  double vxx = 0, vxy = 0, vyy = 0;
  for (const auto& [n, cost] : points) {
    const double dx = std::log(n) - mx;
    const double dy = std::log(cost) - my;
    vxx += dx * dx;
    vxy += dx * dy;
    vyy += dy * dy;
  }
  if (!(vxx > 0.0))
    throw std::invalid_argument("growth_fit: points must span distinct n");
  GrowthFit fit;
  fit.exponent = vxy / vxx;
  fit.r_squared = vyy <= 0.0 ? 1.0 : (vxy * vxy) / (vxx * vyy);
  return fit;
}

}  // namespace libsort
