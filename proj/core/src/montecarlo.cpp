#include "typent/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "typent/error.hpp"

namespace typent {

double Histogram::bin_lo(std::size_t i) const {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
}

double Histogram::bin_hi(std::size_t i) const {
  return lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(counts.size());
}

std::uint64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram make_histogram(const std::vector<double>& values, int bins, double lo, double hi) {
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    const double pos = (v - lo) / (hi - lo) * bins;
    const auto idx = static_cast<long>(std::floor(pos));
    h.counts[static_cast<std::size_t>(std::clamp(idx, 0L, static_cast<long>(bins) - 1))] += 1;
  }
  return h;
}

double McReport::deviation_in_sigma() const {
  if (!prediction) {
    return 0.0;
  }
  const double diff = std::abs(mean - *prediction);
  if (std_error == 0.0) {
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return diff / std_error;
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SampleValue> run_samples(std::size_t n, std::uint64_t seed, unsigned threads,
                                     const std::function<SampleValue(Rng&, std::size_t)>& f) {
  std::vector<SampleValue> out(n);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max<std::size_t>(1, n), threads == 0 ? default_threads() : threads));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = make_stream(seed, i);
      out[i] = f(rng, i);
    }
  };
  if (workers <= 1) {
    work(0, n);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) {
        break;
      }
      pool.emplace_back([&, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

McReport summarize(const std::vector<SampleValue>& samples, std::uint64_t seed, bool with_histogram) {
  if (samples.size() < 2) {
    throw Error(Errc::range_error, "need at least two samples");
  }
  McReport r;
  r.n_samples = samples.size();
  r.seed = seed;
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  double gsum = 0.0;
  double gmin = samples.front().global;
  double gmax = samples.front().global;
  for (const auto& s : samples) {
    sum += s.local;
    gsum += s.global;
    gmin = std::min(gmin, s.global);
    gmax = std::max(gmax, s.global);
  }
  r.mean = sum / n;
  double ss = 0.0;
  for (const auto& s : samples) {
    ss += (s.local - r.mean) * (s.local - r.mean);
  }
  r.std_error = std::sqrt(ss / (n - 1.0) / n);
  r.realized_global_purity = gsum / n;
  r.global_purity_spread = gmax - gmin;
  if (with_histogram) {
    std::vector<double> locals;
    locals.reserve(samples.size());
    for (const auto& s : samples) {
      locals.push_back(s.local);
    }
    r.histogram = make_histogram(locals);
  }
  return r;
}

}  // namespace typent
