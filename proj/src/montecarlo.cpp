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

#include "kout/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "kout/components.hpp"
#include "kout/error.hpp"
#include "kout/graph.hpp"
#include "kout/robustness.hpp"

namespace kout {

std::string_view kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::connectivity: return "connectivity";
    case ExperimentKind::giant: return "giant";
    case ExperimentKind::er_compare: return "er-compare";
    case ExperimentKind::robust_sample: return "robust-sample";
  }
  return "?";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (auto kind : {ExperimentKind::connectivity, ExperimentKind::giant,
                    ExperimentKind::er_compare, ExperimentKind::robust_sample}) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::uint64_t GammaSpec::resolve(std::uint64_t n) const {
  if (count) return *count;
  if (alpha) return static_cast<std::uint64_t>(std::llround(*alpha * static_cast<double>(n)));
  return 0;
}

void validate(const ExperimentConfig& config) {
  if (config.n < 2) throw ParameterError("n must be at least 2");
  if (config.trials < 1) throw ParameterError("trials must be at least 1");
  if (config.k_range.lo < 1 || config.k_range.lo > config.k_range.hi ||
      config.k_range.hi > config.n - 1) {
    throw ParameterError("k range must satisfy 1 <= k_min <= k_max <= n - 1");
  }
  if (config.gamma_spec.count && config.gamma_spec.alpha) {
    throw ParameterError("give either a deletion count or a fraction, not both");
  }
  const auto& alpha = config.gamma_spec.alpha;
  if (alpha && !(*alpha >= 0.0 && *alpha < 1.0)) {
    throw ParameterError("deletion fraction must lie in [0, 1)");
  }
  if (config.gamma_spec.resolve(config.n) >= config.n) {
    throw ParameterError("deletion count must be below n");
  }
  if (config.deletion == DeletionMode::bernoulli && config.gamma_spec.count) {
    throw ParameterError("Bernoulli deletion needs a fraction, not a count");
  }
  if (config.threads < 0) throw ParameterError("thread count must be non-negative");
  if (config.kind == ExperimentKind::robust_sample) {
    if (config.r < 1) throw ParameterError("r must be at least 1");
    if (config.n > kMaxRobustnessNodes) {
      throw CapacityError("robustness sampling supports at most " +
                          std::to_string(kMaxRobustnessNodes) + " nodes");
    }
  }
}

RngSeed derive_trial_seed(RngSeed master, std::uint64_t k, std::uint64_t gamma,
                          std::uint64_t trial_index) {
  std::uint64_t h = splitmix64(master.master);
  // Each input is mixed before folding in: a single round lets high-bit
  // flips through with poor diffusion.
  h = splitmix64(h ^ splitmix64(k));
  h = splitmix64(h ^ splitmix64(gamma));
  h = splitmix64(h ^ splitmix64(trial_index));
  return RngSeed{h};
}

RngSeed er_master(RngSeed master) { return RngSeed{splitmix64(master.master ^ 0x4552ULL)}; }

namespace {

std::vector<NodeId> sample_deletions(std::uint64_t n, std::uint64_t gamma, DeletionMode mode,
                                     double alpha, RngSeed seed) {
  return mode == DeletionMode::bernoulli ? sample_bernoulli_deleted(n, alpha, seed)
                                         : sample_deleted_nodes(n, gamma, seed);
}

TrialRecord record_from(std::uint64_t k, std::uint64_t deleted, std::uint64_t survivors,
                        std::uint64_t giant, RngSeed seed) {
  TrialRecord rec;
  rec.k = k;
  rec.gamma = deleted;
  rec.trial_seed = seed.master;
  rec.giant_size = giant;
  rec.outside = survivors - giant;
  rec.connected = rec.outside == 0;
  return rec;
}

std::vector<std::uint8_t> alive_mask(std::uint64_t n, const std::vector<NodeId>& deleted) {
  std::vector<std::uint8_t> alive(n, 1);
  for (NodeId d : deleted) alive[d] = 0;
  return alive;
}

int thread_count(const ExperimentConfig& config) {
  return config.threads > 0 ? config.threads : omp_get_max_threads();
}

// Runs body(i) for i in [0, count) into out[i].
template <typename T, typename Body>
void run_indexed(std::vector<T>& out, Execution exec, int threads, Body&& body) {
  const auto count = static_cast<std::int64_t>(out.size());
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = body(i);
}

void emit(SweepResult& result, std::vector<TrialRecord>& batch, const AggregateRow& row,
          bool keep, const TrialSink& sink) {
  result.rows.push_back(row);
  if (sink) {
    for (const auto& rec : batch) sink(rec);
  }
  if (keep) result.trials.insert(result.trials.end(), batch.begin(), batch.end());
}

SweepResult run_kout_sweep(const ExperimentConfig& config, const SweepOptions& options) {
  validate(config);
  const std::uint64_t gamma = config.gamma_spec.resolve(config.n);
  const double alpha = config.gamma_spec.alpha.value_or(0.0);
  const int threads = thread_count(config);
  SweepResult result;
  std::vector<TrialRecord> batch(config.trials);
  for (std::uint64_t k = config.k_range.lo; k <= config.k_range.hi; ++k) {
    const std::uint64_t seed_k = config.coupled ? 0 : k;
    run_indexed(batch, options.exec, threads, [&](std::int64_t i) {
      const auto idx = static_cast<std::uint64_t>(i);
      TrialRecord rec = run_kout_trial(config.n, k, gamma, config.deletion, alpha,
                                       derive_trial_seed(config.master_seed, seed_k, gamma, idx));
      rec.trial_index = idx;
      return rec;
    });
    emit(result, batch, aggregate(config.n, k, gamma, batch), options.keep_trials, options.sink);
  }
  return result;
}

}  // namespace

TrialRecord run_kout_trial(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                           DeletionMode mode, double alpha, RngSeed trial_seed) {
  const RngSeed graph_seed = stream_seed(trial_seed, kGraphStream);
  const auto deleted = sample_deletions(n, gamma, mode, alpha,
                                        stream_seed(trial_seed, kDeletionStream));
  const auto alive = alive_mask(n, deleted);
  if (k < 1 || k >= n) throw ParameterError("K-out graph needs 1 <= k <= n - 1");

  // Mirrors generate_selection without materializing the table.
  DisjointSets sets(n);
  DistinctSampler sampler;
  std::vector<std::uint64_t> draw;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    Rng rng(stream_seed(graph_seed, i));
    sampler.sample(rng, n - 1, k, draw);
    for (std::uint64_t t : draw) {
      const std::uint64_t j = t >= i ? t + 1 : t;
      if (alive[j]) sets.unite(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  // Deleted nodes are singletons, so the largest set is a survivor set.
  return record_from(k, deleted.size(), n - deleted.size(), sets.largest(), trial_seed);
}

TrialRecord run_kout_trial_reference(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                                     DeletionMode mode, double alpha, RngSeed trial_seed) {
  auto [graph, table] = generate_kout(n, k, stream_seed(trial_seed, kGraphStream));
  const RngSeed deletion_seed = stream_seed(trial_seed, kDeletionStream);
  auto [survivor, record] = mode == DeletionMode::bernoulli
                                ? delete_bernoulli_nodes(graph, alpha, deletion_seed)
                                : delete_random_nodes(graph, gamma, deletion_seed);
  const auto labeling = connected_components(survivor);
  return record_from(k, record.gamma, survivor.node_count(), labeling.largest_size, trial_seed);
}

TrialRecord run_er_trial(std::uint64_t n, double p, std::uint64_t gamma, DeletionMode mode,
                         double alpha, RngSeed trial_seed) {
  const auto deleted = sample_deletions(n, gamma, mode, alpha,
                                        stream_seed(trial_seed, kDeletionStream));
  const auto alive = alive_mask(n, deleted);
  DisjointSets sets(n);
  for_each_er_edge(n, p, stream_seed(trial_seed, kGraphStream), [&](NodeId u, NodeId v) {
    if (alive[u] && alive[v]) sets.unite(u, v);
  });
  return record_from(0, deleted.size(), n - deleted.size(), sets.largest(), trial_seed);
}

AggregateRow aggregate(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                       const std::vector<TrialRecord>& trials) {
  AggregateRow row;
  row.n = n;
  row.k = k;
  row.gamma = gamma;
  row.trials = trials.size();
  if (trials.empty()) return row;
  std::uint64_t connected = 0;
  std::uint64_t outside_sum = 0;
  for (const auto& rec : trials) {
    connected += rec.connected ? 1 : 0;
    outside_sum += rec.outside;
    row.max_outside = std::max(row.max_outside, rec.outside);
  }
  const double t = static_cast<double>(row.trials);
  row.p_connected_hat = static_cast<double>(connected) / t;
  const double half = 1.96 * std::sqrt(row.p_connected_hat * (1.0 - row.p_connected_hat) / t);
  row.ci_low = std::max(0.0, row.p_connected_hat - half);
  row.ci_high = std::min(1.0, row.p_connected_hat + half);
  row.mean_outside = static_cast<double>(outside_sum) / t;
  return row;
}

SweepResult run_connectivity_sweep(const ExperimentConfig& config, const SweepOptions& options) {
  return run_kout_sweep(config, options);
}

SweepResult run_giant_sweep(const ExperimentConfig& config, const SweepOptions& options) {
  return run_kout_sweep(config, options);
}

ErComparison run_er_comparison(const ExperimentConfig& config, const ErSweepOptions& options) {
  validate(config);
  const std::uint64_t gamma = config.gamma_spec.resolve(config.n);
  const double alpha = config.gamma_spec.alpha.value_or(0.0);
  const int threads = thread_count(config);
  const RngSeed er_seed = er_master(config.master_seed);
  ErComparison out;
  std::vector<TrialRecord> kout_batch(config.trials);
  std::vector<TrialRecord> er_batch(config.trials);
  for (std::uint64_t k = config.k_range.lo; k <= config.k_range.hi; ++k) {
    const std::uint64_t seed_k = config.coupled ? 0 : k;
    const double p = matched_er_probability(config.n, k);
    run_indexed(kout_batch, options.exec, threads, [&](std::int64_t i) {
      const auto idx = static_cast<std::uint64_t>(i);
      TrialRecord rec = run_kout_trial(config.n, k, gamma, config.deletion, alpha,
                                       derive_trial_seed(config.master_seed, seed_k, gamma, idx));
      rec.trial_index = idx;
      return rec;
    });
    run_indexed(er_batch, options.exec, threads, [&](std::int64_t i) {
      const auto idx = static_cast<std::uint64_t>(i);
      TrialRecord rec = run_er_trial(config.n, p, gamma, config.deletion, alpha,
                                     derive_trial_seed(er_seed, seed_k, gamma, idx));
      rec.k = k;
      rec.trial_index = idx;
      return rec;
    });
    emit(out.kout, kout_batch, aggregate(config.n, k, gamma, kout_batch), options.keep_trials,
         options.kout_sink);
    emit(out.er, er_batch, aggregate(config.n, k, gamma, er_batch), options.keep_trials,
         options.er_sink);
  }
  return out;
}

std::vector<RobustSampleRow> run_robustness_sample(const ExperimentConfig& config,
                                                   Execution exec) {
  validate(config);
  if (config.kind != ExperimentKind::robust_sample) {
    throw ParameterError("robustness sampling needs kind robust_sample");
  }
  const std::uint64_t gamma = config.gamma_spec.resolve(config.n);
  const double alpha = config.gamma_spec.alpha.value_or(0.0);
  const int threads = thread_count(config);
  std::vector<RobustSampleRow> rows;
  struct Outcome {
    bool robust = false;
    bool r_connected = false;
  };
  std::vector<Outcome> batch(config.trials);
  for (std::uint64_t k = config.k_range.lo; k <= config.k_range.hi; ++k) {
    const std::uint64_t seed_k = config.coupled ? 0 : k;
    run_indexed(batch, exec, threads, [&](std::int64_t i) {
      const RngSeed seed =
          derive_trial_seed(config.master_seed, seed_k, gamma, static_cast<std::uint64_t>(i));
      auto [graph, table] = generate_kout(config.n, k, stream_seed(seed, kGraphStream));
      const RngSeed deletion_seed = stream_seed(seed, kDeletionStream);
      auto [g, record] = config.deletion == DeletionMode::bernoulli
                             ? delete_bernoulli_nodes(graph, alpha, deletion_seed)
                             : delete_random_nodes(graph, gamma, deletion_seed);
      Outcome outcome;
      // A lone survivor counts as neither r-robust nor r-connected.
      if (g.node_count() >= 2) {
        outcome.robust = is_r_robust_bruteforce(g, config.r, Execution::serial).robust;
        outcome.r_connected = vertex_connectivity_bruteforce(g) >= config.r;
      }
      return outcome;
    });
    RobustSampleRow row{config.n, k, config.r, gamma, config.trials, 0, 0};
    for (const auto& outcome : batch) {
      row.robust_count += outcome.robust ? 1 : 0;
      row.connected_count += outcome.r_connected ? 1 : 0;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_aggregate_header(std::ostream& out) {
  out << "n,k,gamma,trials,p_connected,ci_low,ci_high,max_outside,mean_outside\n";
}

void write_aggregate_row(std::ostream& out, const AggregateRow& row) {
  out << fmt::format("{},{},{},{},{:.6f},{:.6f},{:.6f},{},{:.6f}\n", row.n, row.k, row.gamma,
                     row.trials, row.p_connected_hat, row.ci_low, row.ci_high, row.max_outside,
                     row.mean_outside);
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  write_aggregate_header(out);
  for (const auto& row : rows) write_aggregate_row(out, row);
}

void write_trials_header(std::ostream& out) {
  out << "n,k,gamma,trial,seed,connected,giant_size,outside\n";
}

void write_trial_row(std::ostream& out, std::uint64_t n, const TrialRecord& rec) {
  out << fmt::format("{},{},{},{},{},{},{},{}\n", n, rec.k, rec.gamma, rec.trial_index,
                     rec.trial_seed, rec.connected ? 1 : 0, rec.giant_size, rec.outside);
}

void write_trials_csv(std::ostream& out, std::uint64_t n, const std::vector<TrialRecord>& recs) {
  write_trials_header(out);
  for (const auto& rec : recs) write_trial_row(out, n, rec);
}

void write_robust_csv(std::ostream& out, const std::vector<RobustSampleRow>& rows) {
  out << "n,k,r,gamma,trials,robust,connected,frac_r_robust,frac_r_connected\n";
  for (const auto& row : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{:.6f},{:.6f}\n", row.n, row.k, row.r, row.gamma,
                       row.trials, row.robust_count, row.connected_count,
                       row.fraction_r_robust(), row.fraction_r_connected());
  }
}

}  // namespace kout
