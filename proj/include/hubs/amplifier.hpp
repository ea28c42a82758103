#ifndef HUBS_AMPLIFIER_HPP
#define HUBS_AMPLIFIER_HPP

#include <cmath>
#include <optional>
#include <string>

#include "hubs/common.hpp"
#include "hubs/params.hpp"

namespace hubs {

enum class Regime { critical, supercritical, general };

std::string regime_name(Regime r);

// Entrywise transform B = exp(gamma * min(M^2, A^2)).
// gamma = 1/(2 sigma0^2) - 1/(2 sigma1^2); M is regime-dependent,
// ~ sigma0 sqrt(2 ln n).  L = M/sigma0 (meaningful in the critical
// regime where M = L sigma0).
struct AmplifierConfig {
  Regime regime = Regime::critical;
  double gamma = 0.0;
  double M = 0.0;
  double L = 0.0;
  double sigma0_sq = 1.0;
  double sigma1_sq = 2.0;

  double cap() const { return std::exp(gamma * M * M); }
};

namespace detect {

struct TruncationOptions {
  double critical_tol = 1e-9;  // |sigma1^2/sigma0^2 - 2| tolerance
  double c0 = 1.0;             // supercritical guard: eps > c0/ln n
};

// 1/(2 sigma0^2) - 1/(2 sigma1^2); requires sigma1^2 > sigma0^2.
double gamma(double sigma0_sq, double sigma1_sq);

AmplifierConfig truncation_level(Regime regime, const ModelParams& params,
                                 const TruncationOptions& opts = {});

// Regime by sigma1^2/sigma0^2 vs 2: within tolerance -> critical;
// above -> supercritical when eps > c0/ln n, else general.
Regime select_regime(const ModelParams& params, const TruncationOptions& opts = {});

template <typename Scalar>
inline Scalar amplify_entry(Scalar x, const AmplifierConfig& cfg) {
  const Scalar m2 = static_cast<Scalar>(cfg.M * cfg.M);
  const Scalar x2 = x * x;
  return std::exp(static_cast<Scalar>(cfg.gamma) * (x2 < m2 ? x2 : m2));
}

// Elementwise B over a full matrix.  Every entry goes through
// amplify_entry, so materialized and streamed scoring agree bit for bit.
Matrix amplify(const Eigen::Ref<const Matrix>& a, const AmplifierConfig& cfg);

// Neumaier-compensated left-to-right sum; the documented row order that
// makes scores independent of parallel schedule.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Row sum of B for one row of A.
double amplified_row_sum(const double* row, Index n, const AmplifierConfig& cfg);

// Degree statistic sum_j (x_j^2/sigma0^2 - 1) for one row.
double degree_row_sum(const double* row, Index n, double sigma0_sq);

}  // namespace detect
}  // namespace hubs

#endif  // HUBS_AMPLIFIER_HPP
