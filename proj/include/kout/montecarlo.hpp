// Copyright 2026 The kout Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOUT_MONTECARLO_HPP_
#define KOUT_MONTECARLO_HPP_

// Reproducible Monte Carlo sweeps over K for random K-out graphs (and
// matched Erdos-Renyi graphs) with random node deletion.
//
// Every trial is keyed by (k, gamma, trial index) and draws from its own
// generator, seeded by derive_trial_seed. Trials run in any order on any
// number of threads; results are folded in key order, so output does not
// depend on scheduling.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "kout/execution.hpp"
#include "kout/rng.hpp"

namespace kout {

enum class ExperimentKind { connectivity, giant, er_compare, robust_sample };
enum class DeletionMode { uniform_subset, bernoulli };

std::string_view kind_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view name);

struct KRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

// Either an absolute deletion count or a fraction alpha of n.
struct GammaSpec {
  std::optional<std::uint64_t> count;
  std::optional<double> alpha;

  // count, else round(alpha * n), else 0.
  std::uint64_t resolve(std::uint64_t n) const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::connectivity;
  std::uint64_t n = 0;
  KRange k_range;
  GammaSpec gamma_spec;
  std::uint64_t trials = 1;
  RngSeed master_seed;
  std::uint64_t r = 1;  // robust_sample only
  DeletionMode deletion = DeletionMode::uniform_subset;
  // Seeds ignore k, so K-out samples for successive k share choice columns
  // and deletions (nodes_outside_giant is then non-increasing in k).
  bool coupled = false;
  int threads = 0;  // 0: OpenMP default
};

// Throws ParameterError (or CapacityError for robust_sample with n > 16).
void validate(const ExperimentConfig& config);

struct TrialRecord {
  std::uint64_t k = 0;
  std::uint64_t gamma = 0;  // nodes actually deleted
  std::uint64_t trial_index = 0;
  std::uint64_t trial_seed = 0;
  bool connected = false;
  std::uint64_t giant_size = 0;
  std::uint64_t outside = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct AggregateRow {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t gamma = 0;
  std::uint64_t trials = 0;
  double p_connected_hat = 0.0;
  double ci_low = 0.0;   // 95% normal-approximation interval, clipped to [0, 1]
  double ci_high = 0.0;
  std::uint64_t max_outside = 0;
  double mean_outside = 0.0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

// splitmix64 chain: h = mix(master); then h = mix(h ^ mix(x)) for x = k,
// gamma, trial_index in turn.
RngSeed derive_trial_seed(RngSeed master, std::uint64_t k, std::uint64_t gamma,
                          std::uint64_t trial_index);

// Sub-streams of a trial seed.
inline constexpr std::uint64_t kGraphStream = 0;
inline constexpr std::uint64_t kDeletionStream = 1;
// ER trials use derive_trial_seed(er_master(master), ...).
RngSeed er_master(RngSeed master);

// One K-out trial: choices from stream kGraphStream, deletions from
// kDeletionStream, union-find over surviving picks. No graph is built.
TrialRecord run_kout_trial(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                           DeletionMode mode, double alpha, RngSeed trial_seed);

// Same trial through generate_kout, delete_*_nodes and connected_components.
// Slow; kept as the reference for run_kout_trial.
TrialRecord run_kout_trial_reference(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                                     DeletionMode mode, double alpha, RngSeed trial_seed);

// One G(n, p) trial with the same deletion streams.
TrialRecord run_er_trial(std::uint64_t n, double p, std::uint64_t gamma, DeletionMode mode,
                         double alpha, RngSeed trial_seed);

// Commutative fold of trials sharing (n, k, nominal gamma).
AggregateRow aggregate(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                       const std::vector<TrialRecord>& trials);

using TrialSink = std::function<void(const TrialRecord&)>;

struct SweepResult {
  std::vector<AggregateRow> rows;
  std::vector<TrialRecord> trials;  // filled when keep_trials
};

struct SweepOptions {
  Execution exec = Execution::parallel;
  bool keep_trials = false;
  // Receives every trial record in (k, trial index) order, one k at a time,
  // so records can stream to disk without being retained.
  TrialSink sink;
};

SweepResult run_connectivity_sweep(const ExperimentConfig& config, const SweepOptions& options = {});
SweepResult run_giant_sweep(const ExperimentConfig& config, const SweepOptions& options = {});

struct ErComparison {
  SweepResult kout;
  SweepResult er;
};

struct ErSweepOptions {
  Execution exec = Execution::parallel;
  bool keep_trials = false;
  TrialSink kout_sink;
  TrialSink er_sink;
};

ErComparison run_er_comparison(const ExperimentConfig& config, const ErSweepOptions& options = {});

struct RobustSampleRow {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t gamma = 0;
  std::uint64_t trials = 0;
  std::uint64_t robust_count = 0;
  std::uint64_t connected_count = 0;  // r-connected

  double fraction_r_robust() const { return static_cast<double>(robust_count) / trials; }
  double fraction_r_connected() const { return static_cast<double>(connected_count) / trials; }

  friend bool operator==(const RobustSampleRow&, const RobustSampleRow&) = default;
};

std::vector<RobustSampleRow> run_robustness_sample(const ExperimentConfig& config,
                                                   Execution exec = Execution::parallel);

// CSV output. Headers:
//   aggregate: n,k,gamma,trials,p_connected,ci_low,ci_high,max_outside,mean_outside
//   trials:    n,k,gamma,trial,seed,connected,giant_size,outside
//   robust:    n,k,r,gamma,trials,robust,connected,frac_r_robust,frac_r_connected
void write_aggregate_header(std::ostream& out);
void write_aggregate_row(std::ostream& out, const AggregateRow& row);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
void write_trials_header(std::ostream& out);
void write_trial_row(std::ostream& out, std::uint64_t n, const TrialRecord& rec);
void write_trials_csv(std::ostream& out, std::uint64_t n, const std::vector<TrialRecord>& recs);
void write_robust_csv(std::ostream& out, const std::vector<RobustSampleRow>& rows);

}  // namespace kout

#endif  // KOUT_MONTECARLO_HPP_
