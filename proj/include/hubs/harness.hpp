#ifndef HUBS_HARNESS_HPP
#define HUBS_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hubs/common.hpp"
#include "hubs/params.hpp"

namespace hubs::harness {

using json = nlohmann::json;

// Parsed size expression over {n, sqrt, ln, pow, ceil, floor, round,
// numbers, + - * / ^}; lets sweep configs track scaling laws like
// "sqrt(n)*pow(ln(n),0.25)" directly.
double eval_k_rule(const std::string& rule, Index n);

struct NoiseConfig {
  Index budget_per_row = 0;
  std::string placement = "worst_case_band";
  double replacement_value = 0.0;
};

struct ExperimentConfig {
  std::vector<Index> n;
  std::vector<Index> N;          // empty -> N = n
  std::vector<std::string> k;    // numbers or k-rules
  std::optional<std::string> s;  // default: s = k
  std::vector<double> sigma0_sq = {1.0};
  std::vector<double> sigma1_sq;  // exactly one of sigma1_sq / eps
  std::vector<double> eps;
  std::vector<double> mu = {0.0};
  std::vector<std::string> detectors = {"chi2"};
  std::string model = "general";  // general | submatrix | heterogeneous
  std::vector<double> het_variances;  // heterogeneous entry variances, cycled
  Index trials = 1;
  std::uint64_t root_seed = 0;
  std::optional<NoiseConfig> noise;
  std::string output;
  int threads = 0;
  bool deterministic_timing = false;  // write runtime_ms as 0 for byte-stable output
};

// Strict parse: unknown keys are rejected.
ExperimentConfig config_from_json(const json& j);

inline constexpr const char* kCsvHeader =
    "n,N,k,s,sigma0_sq,sigma1_sq,mu,eps,model,detector,trial,seed,status,"
    "exact_recovery,precision,recall,rank_margin,runtime_ms";

struct SweepResult {
  std::string csv;   // header + one row per (cell, detector, trial)
  json summary;      // per-cell recovery rates with Wilson 95% intervals
};

// Executes the full grid.  Instance seeds depend on (root_seed, cell,
// trial) but not on the detector, so detectors within a cell are paired.
// Output row order is deterministic regardless of `threads`.
SweepResult run_sweep(const ExperimentConfig& config);

// Fault injection hooks for the validation suite's self-tests.
enum class Fault { none, flip_gamma_sign, drop_truncation };

// Bundled numerical checks; returns the number of failed checks and
// writes one line per check.  fast targets < 60 s, full adds the heavier
// moment and concentration sweeps.
int run_validate(const std::string& level, std::ostream& out, Fault fault = Fault::none);

}  // namespace hubs::harness

#endif  // HUBS_HARNESS_HPP
