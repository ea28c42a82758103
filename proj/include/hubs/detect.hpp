#ifndef HUBS_DETECT_HPP
#define HUBS_DETECT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hubs/amplifier.hpp"
#include "hubs/common.hpp"
#include "hubs/model_gen.hpp"
#include "hubs/params.hpp"

namespace hubs {

struct DetectionResult {
  std::string detector;  // chi2 | degree | spectral
  Vector scores;
  Vector centered_scores;      // scores - n*mu0 (mu0 = 0 for baselines)
  std::vector<Index> selected;  // sorted, |selected| = s
  std::vector<Index> ties;      // all rows tied at the boundary, when ambiguous
  double mu0 = 0.0;
  std::optional<AmplifierConfig> config;
  bool converged = true;  // spectral only
  std::vector<std::string> warnings;
};

struct RecoveryMetrics {
  bool exact = false;
  double precision = 0.0;
  double recall = 0.0;
  double rank_margin = 0.0;  // lowest hub score - highest non-hub score
};

namespace detect {

// E_{p0}[exp(gamma min(M^2, x^2))] by quadrature on [-M, M] plus the
// exact Gaussian tail mass at the clamp; absolute error <= 1e-9.
double mu_null(const AmplifierConfig& cfg, double sigma0_sq);

// Row sums of B and centered scores.  threads = 0 means all cores; the
// per-row summation order is fixed, so the result is thread-invariant.
std::pair<Vector, Vector> score_rows(const Eigen::Ref<const Matrix>& a,
                                     const AmplifierConfig& cfg, int threads = 0);

// Same scores from a row stream, without materializing B or A.
Vector stream_scores(const model_gen::RowStream& stream, const AmplifierConfig& cfg,
                     int threads = 0);

// Indices of the s largest scores.  Boundary ties break toward the
// smallest row index; when the tie straddles the boundary all tied rows
// are reported.
std::pair<std::vector<Index>, std::vector<Index>> top_s(const Vector& scores, Index s);

DetectionResult detect(const Eigen::Ref<const Matrix>& a, const ModelParams& params,
                       std::optional<Regime> regime = {}, const TruncationOptions& opts = {},
                       int threads = 0);
DetectionResult detect(const HubInstance& instance, std::optional<Regime> regime = {},
                       const TruncationOptions& opts = {}, int threads = 0);

// Baseline: rank rows by sum_j (A_ij^2/sigma0^2 - 1).
DetectionResult degree_detect(const Eigen::Ref<const Matrix>& a, double sigma0_sq, Index s,
                              int threads = 0);

// Baseline: power iteration on A A^T from the normalized all-ones
// vector; scores are |entries| of the iterate.
DetectionResult spectral_detect(const Eigen::Ref<const Matrix>& a, Index s,
                                int iterations = 100, double tol = 1e-12);

RecoveryMetrics evaluate(const DetectionResult& result, const std::vector<Index>& truth);

}  // namespace detect
}  // namespace hubs

#endif  // HUBS_DETECT_HPP
