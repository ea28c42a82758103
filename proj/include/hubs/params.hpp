#ifndef HUBS_PARAMS_HPP
#define HUBS_PARAMS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hubs/common.hpp"

namespace hubs {

// Scalar problem parameters.  eps and delta are always derived, never
// stored: eps = sigma1^2/(2 sigma0^2) - 1, and k = n^(0.5 - delta).
struct ModelParams {
  Index n = 0;  // columns
  Index N = 0;  // rows
  Index s = 1;  // number of hub rows |S|
  Index k = 1;  // special entries per hub row
  double sigma0_sq = 1.0;
  double sigma1_sq = 2.0;
  double mu = 0.0;

  double eps() const { return sigma1_sq / (2.0 * sigma0_sq) - 1.0; }
  double delta() const {
    return 0.5 - std::log(static_cast<double>(k)) / std::log(static_cast<double>(n));
  }

  void validate() const;
};

// Ground truth of a planted instance: hub rows S, per-hub column sets
// T_i and per-entry planted variances (sigma1^2 everywhere in the
// homogeneous model).
struct PlantedSupport {
  std::vector<Index> hub_rows;                        // sorted
  std::vector<std::vector<Index>> special_columns;    // per hub, sorted
  std::vector<std::vector<double>> special_variance;  // aligned with special_columns

  void validate(Index N, Index n) const;
  // Index into hub_rows/special_columns for a row, or -1 if not a hub.
  Index hub_index(Index row) const;
};

struct CorruptedEntry {
  Index row = 0;
  Index col = 0;
  double old_value = 0.0;
  double new_value = 0.0;
};

struct HubInstance {
  Matrix matrix;  // N x n
  std::optional<PlantedSupport> support;
  ModelParams params;
  std::uint64_t seed = 0;
  std::string model = "null";  // null | general | submatrix | heterogeneous
  std::vector<CorruptedEntry> corrupted_entries;
  std::vector<std::string> warnings;
};

enum class NoisePlacement { worst_case_band, uniform_random };

// Adversarial corruption of planted entries.  worst_case_band targets
// entries whose magnitude falls in [M - sigma0^2/(eps M), M], the points
// that carry the planted rows' amplified mass.
struct NoisePolicy {
  Index budget_per_row = 0;
  NoisePlacement placement = NoisePlacement::worst_case_band;
  double replacement_value = 0.0;
};

}  // namespace hubs

#endif  // HUBS_PARAMS_HPP
