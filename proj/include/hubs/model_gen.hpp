#ifndef HUBS_MODEL_GEN_HPP
#define HUBS_MODEL_GEN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hubs/amplifier.hpp"
#include "hubs/common.hpp"
#include "hubs/params.hpp"

namespace hubs::model_gen {

// All generators are pure functions of (params, seed): per-row entry
// streams and per-row column choices are derived from the root seed by
// counter-based hashing, so instances are bit-identical across thread
// counts and rows can be re-generated on demand without materializing
// the matrix.

HubInstance sample_null(const ModelParams& params, std::uint64_t seed);

// Hub rows uniformly random (or caller-fixed); each hub draws its own
// uniform k-subset of columns independently.
HubInstance plant_general(const ModelParams& params, std::uint64_t seed,
                          const std::optional<std::vector<Index>>& fixed_hub_rows = {},
                          const std::optional<std::vector<Index>>& fixed_columns = {});

// All hub rows share one random k-subset of columns; requires s == k.
HubInstance plant_submatrix(const ModelParams& params, std::uint64_t seed);

// Per-hub entry variances; per_hub_variances[i][j] is sigma_ij^2 for the
// j-th special entry of hub i (|T_i| = per_hub_variances[i].size()).
// Variances below 2(1+eps) sigma0^2 with eps > 0 produce a warning on the
// instance, not a rejection.
HubInstance plant_heterogeneous(const ModelParams& params,
                                const std::vector<std::vector<double>>& per_hub_variances,
                                std::uint64_t seed);

// Distributional column: coordinate i in S is N(mu, sigma1^2) with
// probability k/n (independently per coordinate), else N(0, sigma0^2).
Vector sample_hub_column(const ModelParams& params, const std::vector<Index>& S,
                         std::uint64_t seed);

// tau_i = sum_{j in T_i} n^(-sigma0^2/sigma_ij^2), the effective planted
// mass of each hub row.
Vector tau(const ModelParams& params, const PlantedSupport& support);

// Corrupt up to budget planted entries per hub row.  worst_case_band
// picks entries with |A_ij| in [M - sigma0^2/(eps M), M] (largest first);
// a shortfall is recorded in the returned instance's warnings.
HubInstance corrupt(const HubInstance& instance, const NoisePolicy& policy,
                    const AmplifierConfig& cfg);

// --- streaming access -------------------------------------------------

PlantedSupport sample_support(const ModelParams& params, std::uint64_t seed,
                              bool shared_columns,
                              const std::optional<std::vector<Index>>& fixed_hub_rows = {},
                              const std::optional<std::vector<Index>>& fixed_columns = {});

// Deterministic row kernel shared by materializing generators and
// streamed scoring; support == nullptr means a null instance.
void fill_row(const ModelParams& params, const PlantedSupport* support, std::uint64_t seed,
              Index row, double* out);

// In-place corruption of one row; returns the entries changed.  Shared
// by corrupt() and streamed experiments.
std::vector<CorruptedEntry> corrupt_row(double* row, Index row_index,
                                        const std::vector<Index>& special_columns,
                                        const NoisePolicy& policy, double band_lo,
                                        double band_hi, std::uint64_t instance_seed,
                                        Index* shortfall = nullptr);

// Row-on-demand view of an instance too large to materialize.
struct RowStream {
  ModelParams params;
  const PlantedSupport* support = nullptr;  // may be null
  std::uint64_t seed = 0;

  Index rows() const { return params.N; }
  Index cols() const { return params.n; }
  void row(Index i, double* buf) const { fill_row(params, support, seed, i, buf); }
};

}  // namespace hubs::model_gen

#endif  // HUBS_MODEL_GEN_HPP
