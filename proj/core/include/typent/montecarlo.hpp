#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "typent/linalg.hpp"

namespace typent {

inline constexpr int kDefaultSamples = 10000;
inline constexpr int kHistogramBins = 100;
inline constexpr const char* kThreadsEnv = "TYPENT_THREADS";

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] double bin_lo(std::size_t i) const;
  [[nodiscard]] double bin_hi(std::size_t i) const;
  [[nodiscard]] std::uint64_t total() const;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

Histogram make_histogram(const std::vector<double>& values, int bins = kHistogramBins, double lo = 0.0,
                         double hi = 1.0);

struct McReport {
  std::optional<std::string> formula_id;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double realized_global_purity = 0.0;
  // max − min of the per-sample global purity; zero up to round-off.
  double global_purity_spread = 0.0;
  std::optional<double> prediction;
  std::optional<Histogram> histogram;

  [[nodiscard]] double deviation_in_sigma() const;
  friend bool operator==(const McReport&, const McReport&) = default;
};

struct SampleValue {
  double local = 0.0;
  double global = 0.0;
};

// Worker count from TYPENT_THREADS, else the hardware concurrency.
unsigned default_threads();

// Evaluates f(stream(seed, i), i) for i < n on up to `threads` workers and
// returns results in index order. threads = 0 means default_threads().
std::vector<SampleValue> run_samples(std::size_t n, std::uint64_t seed, unsigned threads,
                                     const std::function<SampleValue(Rng&, std::size_t)>& f);

McReport summarize(const std::vector<SampleValue>& samples, std::uint64_t seed, bool with_histogram = true);

}  // namespace typent
