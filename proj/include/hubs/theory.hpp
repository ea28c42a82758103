#ifndef HUBS_THEORY_HPP
#define HUBS_THEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hubs/amplifier.hpp"
#include "hubs/common.hpp"
#include "hubs/params.hpp"

namespace hubs::theory {

// ---- chi-squared divergence -------------------------------------------

struct DivergenceReport {
  double value = 0.0;  // +inf when !finite
  bool finite = true;
  std::string method;  // closed_form | quadrature
  std::optional<double> truncation;
};

// chi^2(p1 || p0) for p0 = N(0, s0sq), p1 = N(mu, s1sq):
//   s0sq / (sigma1 sqrt(2 s0sq - s1sq)) * exp(mu^2/(2 s0sq - s1sq)) - 1
// for s1sq < 2 s0sq; divergent otherwise.
DivergenceReport chi2_closed(double sigma0_sq, double sigma1_sq, double mu);

// Adaptive quadrature of  int p1^2/p0 - 1  to absolute error 1e-9.
// With `truncation` = M, both densities are clamped to [-M, M] and the
// point masses at the clamp contribute [P1(|x|>M)]^2 / P0(|x|>M) split
// across the two tails (the truncated distributions of the SQ bounds).
double chi2_quadrature(double sigma0_sq, double sigma1_sq, double mu,
                       std::optional<double> truncation = {});

struct Detectability {
  bool detectable = false;
  double margin = 0.0;  // sqrt(chi^2) * k / sqrt(n)
  double chi2 = 0.0;
  bool chi2_finite = true;
};

// sqrt(chi^2) vs sqrt(n)/k -- the heuristic detectability condition, not
// a theorem.
Detectability predict_detectability(const ModelParams& params);

// ---- analysis thresholds ------------------------------------------------

struct ThresholdReport {
  double t = 0.0;
  double t2 = 0.0;
  std::vector<double> t_i;  // per-hub, general regime
  double c = 1.0;
  bool dominance = false;   // kL > 100(t+t2) (critical) / k mu1 > 100(t+t2+mu0)
  double dominance_ratio = 0.0;
  std::string notes;
};

// Evaluates the lemmas' threshold expressions verbatim with the supplied
// constant c.  For the general regime, tau_i defaults to the homogeneous
// value k n^(-sigma0^2/sigma1^2) unless explicit values are given.
ThresholdReport threshold_formulas(const ModelParams& params, const AmplifierConfig& cfg,
                                   double c = 1.0, const std::vector<double>& tau_i = {});

// E[exp(gamma min(M^2, x^2))] under N(0, sigma_sq_planted), quadrature
// body plus exact tail, absolute error <= 1e-9.
double mu_planted(const AmplifierConfig& cfg, double sigma_sq_planted);

// ---- moment / concentration Monte Carlo checks --------------------------

struct MomentCheck {
  double mc_estimate = 0.0;
  double bound_shape = 0.0;  // paper bound evaluated with c = 1
  double implied_c = 0.0;    // mc_estimate / bound_shape
  double std_error = 0.0;
  double quadrature_value = 0.0;  // exact E[(B-mu)^l] for cross-checking
};

// Central moment E[(B - mu)^l] under the null (planted = false) or a
// planted N(0, sigma_sq) entry, against the matching bound shape.
MomentCheck moment_bound_check(bool planted, double sigma_sq, int l,
                               const AmplifierConfig& cfg, Index trials, std::uint64_t seed);

struct ConcentrationCheck {
  double mc_mth_moment = 0.0;
  double bound_value = 0.0;  // right-hand side with c = 1
  double ratio = 0.0;
  double exact_m2 = 0.0;  // sum of Var(X_j), the m = 2 identity
  double std_error = 0.0;
};

// E[(sum_j X_j)^m] for independent X_j = B_j - mu_j with the listed
// entry variances, vs the moment-inequality right-hand side.
ConcentrationCheck concentration_check(const std::vector<double>& variances, int m,
                                       const AmplifierConfig& cfg, Index trials,
                                       std::uint64_t seed);

// ---- pairwise correlations & statistical dimension ----------------------

struct CorrelationParams {
  Index n = 0;
  Index k = 0;
  Index r = 0;  // |S cap T|
  double mu = 0.0;
  double sigma0_sq = 1.0;
  double sigma1_sq = 1.0;
  double C = 2.0;  // truncation constant in M = sigma1 sqrt(C ln k)

  // beta = s0sq/(sigma1 sqrt(2 s0sq - s1sq)) exp(mu^2/(2 s0sq - s1sq)) = 1 + chi^2
  double beta() const;
  double alpha_scale() const;   // k^2/n^2
  double alpha_excess() const;  // sigma1^2/sigma0^2 - 2
};

// rho(F_S, F_T) = (k^2/n^2)(beta^r - 1); requires sigma1^2 < 2 sigma0^2.
double pairwise_corr_subcritical(const CorrelationParams& cp);

enum class TruncatedCorrCase { at_threshold, above_threshold };

// Truncated-coordinate upper bounds:
//   at threshold:    (k^2/n^2) (C ln k / 2)^(r/2)
//   slightly above:  (k^2/n^2) k^(C alpha r / 4)
double pairwise_corr_truncated(const CorrelationParams& cp, TruncatedCorrCase which);

struct AvgCorrBound {
  double bound = 0.0;            // 2 alpha beta^ell
  double min_subset_size = 0.0;  // 2 C(n,k) / (ell! (n/2k^2)^ell), +inf if huge
  double min_subset_log = 0.0;   // natural log of the same
  bool small_n_warning = false;  // 2k^2 >= n
};

AvgCorrBound avg_corr_bound(double alpha_scale, double beta, int ell,
                            Index n = 0, Index k = 0);

// floor(ell! (n/k^2)^ell / 2), saturated at int64 max.  Vacuous when
// n <= k^2.
long long sda_value(Index n, Index k, int ell);

enum class LowerBoundCase { zero_mu_subcritical, at_threshold, slightly_above, equal_sigmas };

struct LowerBoundParams {
  double eps = 0.0;      // zero_mu_subcritical: sigma1^2 = 2 sigma0^2 (1-eps)
  double alpha = 0.0;    // slightly_above: sigma1^2 = (2+alpha) sigma0^2
  double mu = 0.0;       // equal_sigmas
  double sigma_sq = 1.0; // equal_sigmas
  double C = 2.0;
  std::optional<double> ell_override;
};

struct SdaReport {
  double ell = 0.0;
  double gamma_bar = 0.0;
  double sda = 0.0;      // may be +inf
  double log_sda = 0.0;  // natural log, always finite for reporting
  double vstat_param = 0.0;        // 1/(3 gamma_bar)
  double query_lower_bound = 0.0;  // (2 nu - 1) d at nu = 3/4
  double one_stat_bound = 0.0;     // min(d, 1/gamma_bar)
  double k = 0.0;                  // n^(0.5 - delta)
  bool vacuous = false;
  std::string formula;
};

// Evaluates the corollaries' gamma_bar / ell / SDA formulas with
// k = n^(0.5-delta).
SdaReport query_bounds(LowerBoundCase which, Index n, double delta,
                       const LowerBoundParams& p = {});

}  // namespace hubs::theory

#endif  // HUBS_THEORY_HPP
