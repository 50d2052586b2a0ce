// Command-line harness: seeded input generation, benchmark sweeps with
// machine-readable output, window census and urn experiments, and
// growth-exponent fitting over previously emitted CSV.
//
// Exit codes: 0 success, 2 I/O or data failure, 64 bad usage.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "libsort/analysis.hpp"
#include "libsort/baselines.hpp"
#include "libsort/library_sort.hpp"
#include "libsort/metrics.hpp"
#include "libsort/rng.hpp"

namespace {

using json = nlohmann::json;
using Key = std::int64_t;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

const std::vector<std::string> kDistributions = {
    "random", "sorted", "reversed", "few-distinct", "nearly-sorted"};
const std::vector<std::string> kAlgorithms = {"library", "insertion",
                                              "binary-insertion"};

// Deterministic per (distribution, n, seed). "random" draws full 64-bit
// values; "nearly-sorted" applies ceil(n/100) random adjacent swaps to the
// sorted sequence.
std::vector<Key> generate(const std::string& dist, std::size_t n,
                          std::uint64_t seed) {
  libsort::SplitMix64 gen(seed);
  std::vector<Key> keys(n);
  if (dist == "random") {
    for (auto& k : keys) k = static_cast<Key>(gen.next());
  } else if (dist == "sorted") {
    for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(i);
  } else if (dist == "reversed") {
    for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(n - 1 - i);
  } else if (dist == "few-distinct") {
    for (auto& k : keys) k = static_cast<Key>(gen.below(16));
  } else if (dist == "nearly-sorted") {
    for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(i);
    if (n >= 2) {
      const std::size_t swaps = (n + 99) / 100;
      for (std::size_t s = 0; s < swaps; ++s) {
        const auto p = static_cast<std::size_t>(gen.below(n - 1));
        std::swap(keys[p], keys[p + 1]);
      }
    }
  } else {
    throw std::invalid_argument("unknown distribution: " + dist);
  }
  return keys;
}

// Writes either to stdout ("-") or to a file; failure to open is an I/O
// error (exit 2), reported by the caller.
int write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// bench

struct BenchConfig {
  std::string algorithm = "library";
  std::vector<std::size_t> sizes;
  double epsilon = 1.0;
  double c = 4.0;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::string distribution = "random";
  std::string format = "csv";
  std::string output = "-";
  unsigned jobs = 1;
};

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  double epsilon = 0.0;
  double c = 0.0;
  std::uint64_t seed = 0;  // per-trial seed; rerun with --seed <this> --trials 1
  std::string distribution;
  libsort::SortMetrics metrics;
  std::uint64_t wall_time_ns = 0;
};

constexpr const char* kCsvHeader =
    "algorithm,n,epsilon,c,seed,distribution,comparisons,shift_moves,"
    "rebalance_moves,max_shift,emergency_rebalances,wall_time_ns,generator";

std::string to_csv(const BenchRecord& r) {
  std::ostringstream line;
  line << r.algorithm << ',' << r.n << ',' << format_real(r.epsilon) << ','
       << format_real(r.c) << ',' << r.seed << ',' << r.distribution << ','
       << r.metrics.comparisons << ',' << r.metrics.shift_moves << ','
       << r.metrics.rebalance_moves << ',' << r.metrics.max_shift << ','
       << r.metrics.emergency_rebalances << ',' << r.wall_time_ns << ','
       << r.metrics.generator << '\n';
  return line.str();
}

json to_json(const BenchRecord& r) {
  return json{{"algorithm", r.algorithm},
              {"n", r.n},
              {"epsilon", r.epsilon},
              {"c", r.c},
              {"seed", r.seed},
              {"distribution", r.distribution},
              {"comparisons", r.metrics.comparisons},
              {"shift_moves", r.metrics.shift_moves},
              {"rebalance_moves", r.metrics.rebalance_moves},
              {"max_shift", r.metrics.max_shift},
              {"emergency_rebalances", r.metrics.emergency_rebalances},
              {"wall_time_ns", r.wall_time_ns},
              {"generator", r.metrics.generator}};
}

// One benchmark trial. Input keys come from stream 1 of the trial seed, the
// library shuffle from stream 2, so key values and arrival order stay
// independent.
BenchRecord run_trial(const BenchConfig& cfg, std::size_t n,
                      std::uint64_t trial_seed) {
  BenchRecord rec;
  rec.algorithm = cfg.algorithm;
  rec.n = n;
  rec.epsilon = cfg.epsilon;
  rec.c = cfg.c;
  rec.seed = trial_seed;
  rec.distribution = cfg.distribution;

  auto input = generate(cfg.distribution, n, libsort::derive_seed(trial_seed, 1));
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.algorithm == "library") {
    libsort::SortParams params;
    params.epsilon = cfg.epsilon;
    params.c = cfg.c;
    params.seed = libsort::derive_seed(trial_seed, 2);
    rec.metrics = libsort::library_sort(std::move(input), params).metrics;
  } else if (cfg.algorithm == "insertion") {
    rec.metrics = libsort::insertion_sort(std::move(input)).metrics;
  } else {
    rec.metrics = libsort::binary_insertion_sort(std::move(input)).metrics;
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.metrics.seed = trial_seed;
  rec.metrics.generator = std::string(libsort::kGeneratorId);
  rec.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  return rec;
}

// Trials run across a worker pool; records land in a slot per trial index
// and a single emitter writes them in order, so the output is byte-stable
// for any --jobs value (wall clock readings aside).
int run_bench(const BenchConfig& cfg) {
  struct Trial {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Trial> trials;
  for (const auto n : cfg.sizes)
    for (std::size_t t = 0; t < cfg.trials; ++t)
      trials.push_back({n, cfg.seed + trials.size()});

  std::vector<BenchRecord> records(trials.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= trials.size()) break;
      records[i] = run_trial(cfg, trials[i].n, trials[i].seed);
    }
  };
  const unsigned pool_size = std::min<unsigned>(
      cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(trials.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < pool_size; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::string out;
  if (cfg.format == "csv") {
    std::ostringstream oss;
    oss << kCsvHeader << '\n';
    for (const auto& rec : records) oss << to_csv(rec);
    out = oss.str();
  } else {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(to_json(rec));
    out = arr.dump(1) + "\n";
  }
  return write_output(cfg.output, out);
}

// ---------------------------------------------------------------------------
// sort

int run_sort(std::size_t n, const std::string& dist, std::uint64_t seed,
             double epsilon, double c, bool print_keys,
             const std::string& output) {
  auto input = generate(dist, n, libsort::derive_seed(seed, 1));
  libsort::SortParams params;
  params.epsilon = epsilon;
  params.c = c;
  params.seed = libsort::derive_seed(seed, 2);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = libsort::library_sort(input, params);
  const auto t1 = std::chrono::steady_clock::now();

  json report{
      {"command", "sort"},
      {"n", n},
      {"distribution", dist},
      {"seed", seed},
      {"epsilon", epsilon},
      {"c", c},
      {"generator", std::string(libsort::kGeneratorId)},
      {"sorted_ok",
       std::is_sorted(result.sorted.begin(), result.sorted.end())},
      {"comparisons", result.metrics.comparisons},
      {"shift_moves", result.metrics.shift_moves},
      {"rebalance_moves", result.metrics.rebalance_moves},
      {"max_shift", result.metrics.max_shift},
      {"emergency_rebalances", result.metrics.emergency_rebalances},
      {"wall_time_ns",
       std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()},
      {"sqrt_prefix",
       json{{"insertions", result.metrics.sqrt_prefix_insertions},
            {"comparisons", result.metrics.sqrt_prefix_comparisons},
            {"shift_moves", result.metrics.sqrt_prefix_shift_moves}}},
  };
  json rounds = json::array();
  for (const auto& r : result.metrics.per_round) {
    rounds.push_back(json{{"round", r.round_index},
                          {"elements_at_end", r.elements_at_end},
                          {"comparisons", r.comparisons},
                          {"shift_moves", r.shift_moves},
                          {"rebalance_moves", r.rebalance_moves},
                          {"max_shift", r.max_shift},
                          {"emergency_rebalances", r.emergency_rebalances}});
  }
  report["per_round"] = std::move(rounds);
  if (print_keys) report["keys"] = result.sorted;
  return write_output(output, report.dump(1) + "\n");
}

// ---------------------------------------------------------------------------
// census

int run_census(std::size_t n, const std::string& dist, double epsilon,
               double c, std::size_t trials, std::uint64_t seed,
               const std::string& output) {
  struct RoundAgg {
    std::size_t window_size = 0;
    std::size_t threshold = 0;
    std::uint64_t windows = 0;
    std::uint64_t violations = 0;
    std::uint64_t support_sum = 0;
  };
  std::map<std::size_t, RoundAgg> rounds;  // keyed by m
  std::uint64_t skipped_small = 0;
  std::uint64_t partial = 0;

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    auto input = generate(dist, n, libsort::derive_seed(trial_seed, 1));
    libsort::SortParams params;
    params.epsilon = epsilon;
    params.c = c;
    params.seed = libsort::derive_seed(trial_seed, 2);
    const auto result = libsort::library_sort(std::move(input), params);
    for (const auto& lab : result.labelings) {
      if (!lab.full) {
        ++partial;
        continue;
      }
      try {
        const auto census = libsort::window_census(lab, epsilon, c);
        auto& agg = rounds[census.m];
        agg.window_size = census.window_size;
        agg.threshold = census.threshold;
        agg.windows += census.windows.size();
        agg.violations += census.violations;
        for (const auto& [support, intercalated] : census.windows) {
          (void)intercalated;
          agg.support_sum += support;
        }
      } catch (const std::domain_error&) {
        ++skipped_small;  // window would not fit this round
      }
    }
  }

  json round_array = json::array();
  std::uint64_t total_windows = 0;
  std::uint64_t total_violations = 0;
  for (const auto& [m, agg] : rounds) {
    total_windows += agg.windows;
    total_violations += agg.violations;
    round_array.push_back(json{
        {"m", m},
        {"window_size", agg.window_size},
        {"threshold", agg.threshold},
        {"windows", agg.windows},
        {"violations", agg.violations},
        {"violation_rate",
         agg.windows == 0 ? 0.0
                          : static_cast<double>(agg.violations) /
                                static_cast<double>(agg.windows)},
        {"mean_support", agg.windows == 0
                             ? 0.0
                             : static_cast<double>(agg.support_sum) /
                                   static_cast<double>(agg.windows)},
    });
  }
  const json report{
      {"command", "census"},
      {"n", n},
      {"distribution", dist},
      {"epsilon", epsilon},
      {"c", c},
      {"trials", trials},
      {"seed", seed},
      {"generator", std::string(libsort::kGeneratorId)},
      {"rounds", round_array},
      {"rounds_skipped_window_too_large", skipped_small},
      {"partial_rounds_excluded", partial},
      {"total_windows", total_windows},
      {"total_violations", total_violations},
      {"overall_violation_rate",
       total_windows == 0 ? 0.0
                          : static_cast<double>(total_violations) /
                                static_cast<double>(total_windows)},
  };
  return write_output(output, report.dump(1) + "\n");
}

// ---------------------------------------------------------------------------
// urn

int run_urn(std::uint64_t m, double c, std::uint64_t throws,
            std::size_t trials, std::uint64_t seed,
            const std::string& output) {
  const auto start = libsort::urn_start(m, c, throws);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto final_a = static_cast<double>(
        libsort::urn_simulate(m, c, throws, seed + t));
    sum += final_a;
    sumsq += final_a * final_a;
  }
  const auto count = static_cast<double>(trials);
  const double mean = sum / count;
  const double var = std::max(0.0, sumsq / count - mean * mean);
  // The A-fraction is a martingale, so the expected final count scales with
  // the total balls added.
  const double expected = static_cast<double>(start.a) *
                          static_cast<double>(m + throws) /
                          static_cast<double>(m);
  const json report{
      {"command", "urn"},
      {"m", m},
      {"c", c},
      {"throws", throws},
      {"trials", trials},
      {"seed", seed},
      {"generator", std::string(libsort::kGeneratorId)},
      {"initial_a", start.a},
      {"initial_b", start.b},
      {"mean_final_a", mean},
      {"expected_final_a", expected},
      {"stddev_final_a", std::sqrt(var)},
      {"standard_error", std::sqrt(var / count)},
  };
  return write_output(output, report.dump(1) + "\n");
}

// ---------------------------------------------------------------------------
// fit

// Reads a bench CSV, averages the chosen cost per (algorithm, n), and fits
// the growth exponent per algorithm.
int run_fit(const std::string& input, const std::string& cost,
            const std::string& output) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open input file: " << input << "\n";
      return kExitIo;
    }
    in = &file;
  }

  std::string line;
  if (!std::getline(*in, line)) {
    std::cerr << "error: empty input\n";
    return kExitIo;
  }
  const auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
  };
  const auto header = split(line);
  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? static_cast<std::ptrdiff_t>(-1)
                              : it - header.begin();
  };
  const auto algo_col = column("algorithm");
  const auto n_col = column("n");
  const auto cmp_col = column("comparisons");
  const auto shift_col = column("shift_moves");
  const auto reb_col = column("rebalance_moves");
  if (algo_col < 0 || n_col < 0 || cmp_col < 0 || shift_col < 0 ||
      reb_col < 0) {
    std::cerr << "error: input is missing required bench columns\n";
    return kExitIo;
  }

  // (algorithm, n) -> (cost sum, row count)
  std::map<std::string, std::map<double, std::pair<double, std::size_t>>> groups;
  std::size_t line_no = 1;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    const auto max_col = std::max({algo_col, n_col, cmp_col, shift_col, reb_col});
    if (static_cast<std::ptrdiff_t>(fields.size()) <= max_col) {
      std::cerr << "error: line " << line_no << ": too few columns\n";
      return kExitIo;
    }
    try {
      const double n = std::stod(fields[static_cast<std::size_t>(n_col)]);
      const double comparisons =
          std::stod(fields[static_cast<std::size_t>(cmp_col)]);
      const double moves =
          std::stod(fields[static_cast<std::size_t>(shift_col)]) +
          std::stod(fields[static_cast<std::size_t>(reb_col)]);
      double value = 0.0;
      if (cost == "comparisons")
        value = comparisons;
      else if (cost == "moves")
        value = moves;
      else
        value = comparisons + moves;
      auto& cell = groups[fields[static_cast<std::size_t>(algo_col)]][n];
      cell.first += value;
      cell.second += 1;
    } catch (const std::exception&) {
      std::cerr << "error: line " << line_no << ": malformed number\n";
      return kExitIo;
    }
  }

  json algos = json::array();
  for (const auto& [algorithm, by_n] : groups) {
    std::vector<std::pair<double, double>> points;
    json point_array = json::array();
    for (const auto& [n, cell] : by_n) {
      const double mean = cell.first / static_cast<double>(cell.second);
      points.emplace_back(n, mean);
      point_array.push_back(json{{"n", n}, {"mean_cost", mean}});
    }
    json entry{{"algorithm", algorithm}, {"points", point_array}};
    try {
      const auto fit = libsort::growth_fit(points);
      entry["exponent"] = fit.exponent;
      entry["r_squared"] = fit.r_squared;
    } catch (const std::invalid_argument& e) {
      entry["error"] = e.what();
    }
    algos.push_back(std::move(entry));
  }
  const json report{{"command", "fit"},
                    {"input", input},
                    {"cost", cost},
                    {"algorithms", algos}};
  return write_output(output, report.dump(1) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instrumented gapped insertion sort workbench"};
  app.require_subcommand(1);

  // bench
  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand(
      "bench", "Run seeded sorting trials and emit one record per trial");
  bench->add_option("--algo", bench_cfg.algorithm, "Algorithm to run")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  bench->add_option("--n", bench_cfg.sizes, "Input sizes (repeatable)")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_cfg.trials, "Trials per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "Master seed; trial i uses seed+i")
      ->capture_default_str();
  bench->add_option("--epsilon", bench_cfg.epsilon, "Spreading parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--c", bench_cfg.c, "Analysis window constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--dist", bench_cfg.distribution, "Input distribution")
      ->check(CLI::IsMember(kDistributions))
      ->capture_default_str();
  bench->add_option("--format", bench_cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--output", bench_cfg.output, "Output path, - for stdout")
      ->capture_default_str();
  bench->add_option("--jobs", bench_cfg.jobs, "Parallel workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // sort
  std::size_t sort_n = 1000;
  std::string sort_dist = "random";
  std::uint64_t sort_seed = 0;
  double sort_epsilon = 1.0;
  double sort_c = 4.0;
  bool sort_print_keys = false;
  std::string sort_output = "-";
  auto* sort_cmd = app.add_subcommand(
      "sort", "Sort one generated input and report metrics as JSON");
  sort_cmd->add_option("--n", sort_n, "Input size")->capture_default_str();
  sort_cmd->add_option("--dist", sort_dist, "Input distribution")
      ->check(CLI::IsMember(kDistributions))
      ->capture_default_str();
  sort_cmd->add_option("--seed", sort_seed, "Seed")->capture_default_str();
  sort_cmd->add_option("--epsilon", sort_epsilon, "Spreading parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sort_cmd->add_option("--c", sort_c, "Analysis window constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sort_cmd->add_flag("--print-keys", sort_print_keys,
                     "Include the sorted keys in the report");
  sort_cmd->add_option("--output", sort_output, "Output path, - for stdout")
      ->capture_default_str();

  // census
  std::size_t census_n = 1 << 16;
  std::string census_dist = "random";
  double census_epsilon = 1.0;
  double census_c = 4.0;
  std::size_t census_trials = 100;
  std::uint64_t census_seed = 0;
  std::string census_output = "-";
  auto* census = app.add_subcommand(
      "census",
      "Window census of support/intercalated elements per round (JSON)");
  census->add_option("--n", census_n, "Input size")->capture_default_str();
  census->add_option("--dist", census_dist, "Input distribution")
      ->check(CLI::IsMember(kDistributions))
      ->capture_default_str();
  census->add_option("--epsilon", census_epsilon, "Spreading parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  census->add_option("--c", census_c, "Window constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  census->add_option("--trials", census_trials, "Seeded runs to aggregate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  census->add_option("--seed", census_seed, "Master seed; trial i uses seed+i")
      ->capture_default_str();
  census->add_option("--output", census_output, "Output path, - for stdout")
      ->capture_default_str();

  // urn
  std::uint64_t urn_m = 1 << 10;
  double urn_c = 4.0;
  std::int64_t urn_throws = -1;
  std::size_t urn_trials = 10000;
  std::uint64_t urn_seed = 0;
  std::string urn_output = "-";
  auto* urn = app.add_subcommand(
      "urn", "Simulate the two-urn process and report the final counts (JSON)");
  urn->add_option("--m", urn_m, "Total starting balls")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  urn->add_option("--c", urn_c, "Urn A starts with ceil(c*log2(m)) balls")
      ->capture_default_str();
  urn->add_option("--throws", urn_throws, "Balls to add (default: m)")
      ->capture_default_str();
  urn->add_option("--trials", urn_trials, "Simulations to average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  urn->add_option("--seed", urn_seed, "Master seed; trial i uses seed+i")
      ->capture_default_str();
  urn->add_option("--output", urn_output, "Output path, - for stdout")
      ->capture_default_str();

  // fit
  std::string fit_input;
  std::string fit_cost = "total";
  std::string fit_output = "-";
  auto* fit = app.add_subcommand(
      "fit", "Fit growth exponents per algorithm from a bench CSV (JSON)");
  fit->add_option("--input", fit_input, "Bench CSV path, - for stdin")
      ->required();
  fit->add_option("--cost", fit_cost,
                  "Cost measure: comparisons, moves, or their total")
      ->check(CLI::IsMember({"total", "moves", "comparisons"}))
      ->capture_default_str();
  fit->add_option("--output", fit_output, "Output path, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bench->parsed()) return run_bench(bench_cfg);
    if (sort_cmd->parsed())
      return run_sort(sort_n, sort_dist, sort_seed, sort_epsilon, sort_c,
                      sort_print_keys, sort_output);
    if (census->parsed())
      return run_census(census_n, census_dist, census_epsilon, census_c,
                        census_trials, census_seed, census_output);
    if (urn->parsed()) {
      const auto throws = urn_throws < 0
                              ? urn_m
                              : static_cast<std::uint64_t>(urn_throws);
      return run_urn(urn_m, urn_c, throws, urn_trials, urn_seed, urn_output);
    }
    if (fit->parsed()) return run_fit(fit_input, fit_cost, fit_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
