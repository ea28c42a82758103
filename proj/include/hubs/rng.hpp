#ifndef HUBS_RNG_HPP
#define HUBS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <set>
#include <vector>

#include "hubs/common.hpp"

// Counter-based seeding: every row / trial / stream gets its own seed
// derived by hashing (root, stream tag, index).  Generation order inside
// a stream is fixed, so results are independent of thread scheduling.

namespace hubs::rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream tags used across the library.  Keeping them in one place avoids
// accidental stream collisions between modules.
enum Stream : std::uint64_t {
  kRowBase = 1,      // per-row background entries
  kPlantValues = 2,  // per-row planted values
  kSupportRows = 3,  // hub row selection
  kSupportCols = 4,  // per-hub column selection
  kColumn = 5,       // distributional column sampler
  kCorrupt = 6,      // noise placement
  kTrial = 7,        // experiment trials
  kOracle = 8,       // SQ oracle perturbations
  kBatch = 9,        // Monte Carlo batches
};

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index = 0) {
  std::uint64_t h = mix64(root + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (stream + 0x9E3779B97F4A7C15ULL));
  h = mix64(h ^ (index + 0x9E3779B97F4A7C15ULL));
  return h;
}

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    return mix64(z);
  }

  // [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Box-Muller on a SplitMix64 stream.  Pairs are cached, so a stream
// consumes two uniforms per two normals; the sequence is a pure function
// of the seed.
struct GaussianStream {
  SplitMix64 u;
  bool has_spare = false;
  double spare = 0.0;

  explicit GaussianStream(std::uint64_t seed) : u(seed) {}

  double next() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double a = u.uniform01();
    while (a <= 0.0) a = u.uniform01();
    const double b = u.uniform01();
    const double r = std::sqrt(-2.0 * std::log(a));
    const double t = 6.283185307179586476925286766559 * b;
    spare = r * std::sin(t);
    has_spare = true;
    return r * std::cos(t);
  }

  double next(double mean, double sd) { return mean + sd * next(); }
};

// Uniform k-subset of [0,n) via Floyd's algorithm, returned sorted.
inline std::vector<Index> sample_subset(SplitMix64& g, Index n, Index k) {
  std::set<Index> chosen;
  for (Index j = n - k; j < n; ++j) {
    const Index t = static_cast<Index>(g.below(static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace hubs::rng

#endif  // HUBS_RNG_HPP
