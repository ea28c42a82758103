#ifndef HUBS_SQ_HPP
#define HUBS_SQ_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hubs/amplifier.hpp"
#include "hubs/common.hpp"
#include "hubs/params.hpp"

namespace hubs::sq {

enum class OracleKind { STAT, VSTAT, ONE_STAT };
enum class PerturbMode { exact, random_uniform, adversarial_sign };

struct OracleSpec {
  OracleKind kind = OracleKind::VSTAT;
  double tau = 0.0;      // STAT tolerance
  long long t = 0;       // VSTAT sample parameter
  PerturbMode mode = PerturbMode::exact;
  std::uint64_t seed = 0;
};

struct Decision {
  std::string verdict;  // planted | null
  int query_count = 0;
  double query_value = 0.0;
  double threshold_used = 0.0;
  double tolerance = 0.0;
};

// Column distribution over R^N used by the SQ oracles.
//
// planted + activated: with probability k/n the whole column is active
// (every coordinate in S drawn from N(mu, sigma1^2)) -- the vector-level
// mixture whose single-query detection gap is 1/N vs (k/n)(1-1/N).
// planted + !activated: each S coordinate independently planted with
// probability k/n (the per-coordinate mixture of the generators).
struct ColumnDist {
  ModelParams params;
  std::vector<Index> hub_coords;  // S subset of [N]
  bool planted = false;
  bool activated = true;
  std::uint64_t seed = 0;

  mutable std::uint64_t counter = 0;  // consumed samples

  Vector draw() const;  // advances counter
};

using Query = std::function<double(const Vector&)>;

// STAT(tau): E[f] within +-tau for f bounded in [-1,1].  When no exact
// expectation is supplied, E[f] is estimated by Monte Carlo with
// 4*SE <= tau/10 enforced (OracleError if that costs more than max_mc
// samples).  Perturbation modes:
//   exact           -> the estimate itself
//   random_uniform  -> uniform inside the remaining honest band
//   adversarial_sign-> pushed toward the wrong verdict for dist.planted
double stat(const ColumnDist& dist, const Query& f, double tau, PerturbMode mode,
            std::uint64_t seed, std::optional<double> exact_expectation = {},
            Index max_mc = 4000000);

// VSTAT(t): E[f] within +-max(1/t, sqrt(p(1-p)/t)) for 0/1-valued f.
double vstat(const ColumnDist& dist, const Query& f, long long t, PerturbMode mode,
             std::uint64_t seed, std::optional<double> exact_expectation = {},
             Index max_mc = 4000000);

// Value of f on the next sample; consumes it.
int one_stat(const ColumnDist& dist, const Query& f);

// 1 iff sum_i (exp(gamma min(M^2, x_i^2)) - mu0) > threshold.
int hub_query(const Vector& column, const AmplifierConfig& cfg, double mu0,
              double threshold);

// (1 - target_null_rate) empirical quantile of the null column statistic
// over `trials` columns; requires trials >= 10/target_null_rate.
double calibrate_threshold(const ModelParams& params, const AmplifierConfig& cfg,
                           double target_null_rate, Index trials, std::uint64_t seed,
                           int threads = 0);

// Single-query detector: one VSTAT(t = C n/k) call with the hub query;
// verdict planted iff the returned value clears the midpoint
// (k/n)(1 - 1/N)/2 between the null and planted expectation bounds.
Decision sq_detect(const ColumnDist& dist, const OracleSpec& oracle,
                   const AmplifierConfig& cfg, double threshold, double C = 4.0);

}  // namespace hubs::sq

#endif  // HUBS_SQ_HPP
