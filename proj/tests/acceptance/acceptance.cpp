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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every experiment runs with a fixed master seed; the last
// criterion reruns all of them with a different thread count and compares
// the CSV output byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "kout/components.hpp"
#include "kout/graph.hpp"
#include "kout/montecarlo.hpp"
#include "kout/numerics.hpp"
#include "kout/robustness.hpp"
#include "oracles.hpp"

namespace {

using namespace kout;

constexpr std::uint64_t kMasterSeed = 20240917;
constexpr int kFirstThreads = 1;
constexpr int kReplayThreads = 4;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// CSV snapshots of every Monte Carlo run, keyed by experiment name.
using Snapshots = std::vector<std::pair<std::string, std::string>>;

std::string csv_of(const SweepResult& result, std::uint64_t n) {
  std::ostringstream out;
  write_aggregate_csv(out, result.rows);
  write_trials_csv(out, n, result.trials);
  return out.str();
}

std::string csv_of(const std::vector<RobustSampleRow>& rows) {
  std::ostringstream out;
  write_robust_csv(out, rows);
  return out.str();
}

ExperimentConfig config(ExperimentKind kind, std::uint64_t n, std::uint64_t k_lo,
                        std::uint64_t k_hi, std::uint64_t trials, int threads) {
  ExperimentConfig c;
  c.kind = kind;
  c.n = n;
  c.k_range = {k_lo, k_hi};
  c.trials = trials;
  c.master_seed = RngSeed{kMasterSeed};
  c.threads = threads;
  return c;
}

const AggregateRow& row_for(const SweepResult& result, std::uint64_t k) {
  return *std::find_if(result.rows.begin(), result.rows.end(),
                       [k](const AggregateRow& r) { return r.k == k; });
}

// ---------------------------------------------------------------------------

Verdict connectivity_transition(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::connectivity, 5000, 1, 25, 1000, threads);
  c.gamma_spec.alpha = 0.5;
  const auto result = run_connectivity_sweep(c, {.keep_trials = true});
  snaps.emplace_back("connectivity n=5000 alpha=0.5", csv_of(result, c.n));
  const auto& low = row_for(result, 3);
  const auto& high = row_for(result, 11);
  return {low.p_connected_hat <= 0.10 && high.p_connected_hat >= 0.90,
          fmt::format("threshold {:.3f}; P(K=3)={:.3f} [{:.3f},{:.3f}] <= 0.10, "
                      "P(K=11)={:.3f} [{:.3f},{:.3f}] >= 0.90",
                      threshold_t1(0.5, 5000), low.p_connected_hat, low.ci_low, low.ci_high,
                      high.p_connected_hat, high.ci_low, high.ci_high)};
}

Verdict few_deletions(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::giant, 50000, 2, 2, 100, threads);
  c.gamma_spec.count = 10;
  const auto result = run_giant_sweep(c, {.keep_trials = true});
  snaps.emplace_back("giant n=50000 K=2 gamma=10", csv_of(result, c.n));
  const auto& row = result.rows.at(0);
  return {row.max_outside <= 2,
          fmt::format("max_outside={} <= 2 over {} trials", row.max_outside, row.trials)};
}

Verdict sublinear_deletions(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::connectivity, 50000, 5, 5, 100, threads);
  c.gamma_spec.count = 2000;
  const auto k5 = run_connectivity_sweep(c, {.keep_trials = true});
  c.k_range = {2, 2};
  const auto k2 = run_connectivity_sweep(c, {.keep_trials = true});
  snaps.emplace_back("connectivity n=50000 K=5 gamma=2000", csv_of(k5, c.n));
  snaps.emplace_back("connectivity n=50000 K=2 gamma=2000", csv_of(k2, c.n));
  const double connected = k5.rows.at(0).p_connected_hat;
  const double disconnected = 1.0 - k2.rows.at(0).p_connected_hat;
  return {connected >= 0.95 && disconnected >= 0.20,
          fmt::format("threshold {:.3f}; connected(K=5)={:.2f} >= 0.95, "
                      "disconnected(K=2)={:.2f} >= 0.20",
                      threshold_t2b(2000), connected, disconnected)};
}

Verdict giant_bound(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::giant, 5000, 6, 14, 1000, threads);
  c.gamma_spec.alpha = 0.4;
  const auto result = run_giant_sweep(c, {.keep_trials = true});
  snaps.emplace_back("giant n=5000 alpha=0.4", csv_of(result, c.n));
  Verdict v;
  std::string parts;
  for (const auto& row : result.rows) {
    const auto lambda = invert_t4(0.4, 5000, static_cast<double>(row.k));
    if (lambda) {
      v.pass = v.pass && row.max_outside <= *lambda;
      parts += fmt::format(" K={}:{}<={}", row.k, row.max_outside, *lambda);
    } else {
      parts += fmt::format(" K={}:{}(no bound)", row.k, row.max_outside);
    }
  }
  v.detail = "max_outside vs inverted bound:" + parts;
  return v;
}

Verdict union_bound(int threads, Snapshots& snaps) {
  struct Case {
    std::uint64_t n, k, gamma, lambda, trials;
  };
  Verdict v;
  for (const Case& cs : {Case{100, 3, 0, 1, 10000}, Case{6, 2, 2, 1, 10000}}) {
    auto c = config(ExperimentKind::connectivity, cs.n, cs.k, cs.k, cs.trials, threads);
    c.gamma_spec.count = cs.gamma;
    const auto result = run_connectivity_sweep(c, {.keep_trials = true});
    snaps.emplace_back(fmt::format("connectivity n={} K={} gamma={}", cs.n, cs.k, cs.gamma),
                       csv_of(result, c.n));
    const double freq = 1.0 - result.rows.at(0).p_connected_hat;
    const double bound = std::min(1.0, cut_union_bound(cs.n, cs.k, cs.gamma, cs.lambda).total);
    const double se = std::sqrt(bound * (1.0 - bound) / static_cast<double>(cs.trials));
    const double limit = bound + 3.0 * se;
    v.pass = v.pass && freq <= limit;
    v.detail += fmt::format("{}(n={},K={},gamma={}) disconnected {:.4f} <= {:.4g} + 3*{:.3g}",
                            v.detail.empty() ? "" : "; ", cs.n, cs.k, cs.gamma, freq, bound, se);
  }
  return v;
}

Verdict numerics_identities() {
  // 10 x values by 10 a values by 10 b values.
  const std::int64_t params[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  double reflect = 0.0;
  double recur = 0.0;
  for (int xi = 0; xi < 10; ++xi) {
    const double x = (xi + 0.5) / 10.0;
    for (std::int64_t a : params) {
      for (std::int64_t b : params) {
        const double ia = reg_inc_beta(x, a, b);
        reflect = std::max(reflect, std::abs(ia - (1.0 - reg_inc_beta(1.0 - x, b, a))));
        const double step = std::exp(static_cast<double>(a) * std::log(x) +
                                     static_cast<double>(b) * std::log1p(-x)) /
                            (static_cast<double>(a) * beta(a, b));
        recur = std::max(recur, std::abs(reg_inc_beta(x, a + 1, b) - ia + step));
      }
    }
  }
  double cdf = 0.0;
  for (int n = 1; n <= 60; ++n) {
    for (double p : {0.01, 0.05, 0.2, 0.37, 0.5, 0.81, 0.95, 0.99}) {
      for (int a = 0; a <= n; ++a) {
        const long double want = oracle::binomial_cdf_direct(a, n, p);
        if (want < 1e-280L) continue;
        cdf = std::max(cdf, static_cast<double>(std::abs(binomial_cdf(a, n, p) - want) / want));
      }
    }
  }
  const double closed = (3.0 - std::sqrt(9.0 - 8.0 / std::numbers::e)) / 4.0;
  const double root = solve_alpha_star(2, 1.0 / std::numbers::e).alpha_star;
  const double alpha_err = std::abs(root - closed);
  return {reflect <= 1e-12 && recur <= 1e-12 && cdf <= 1e-12 && alpha_err <= 1e-6 &&
              std::abs(root - 0.134727) <= 1e-6,
          fmt::format("reflection {:.2e}, recurrence {:.2e} (<= 1e-12, 1000 points); "
                      "cdf rel {:.2e} (<= 1e-12, n <= 60); alpha*={:.9f} (|err| {:.1e} <= 1e-6)",
                      reflect, recur, cdf, root, alpha_err)};
}

Verdict robustness_oracles() {
  std::vector<UGraph> graphs;
  // Hand-built.
  for (std::size_t n = 1; n <= 8; ++n) {
    graphs.push_back(oracle::path(n));
    graphs.push_back(oracle::complete(n));
    if (n >= 3) graphs.push_back(oracle::cycle(n));
  }
  graphs.push_back(oracle::make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  graphs.push_back(oracle::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));  // star
  graphs.push_back(oracle::make_graph(4, {}));
  // Random K-out (with and without deletion) and ER.
  Rng pick(RngSeed{kMasterSeed});
  std::uint64_t draw = 0;
  while (graphs.size() < 500) {
    const std::size_t n = 2 + pick.below(7);
    const RngSeed seed{kMasterSeed + ++draw};
    if (draw % 2 == 0) {
      const std::size_t k = 1 + pick.below(n - 1);
      auto g = generate_kout(n, k, seed).first;
      if (draw % 4 == 0 && n > 3) {
        g = delete_random_nodes(g, pick.below(n / 2), stream_seed(seed, 1)).first;
      }
      graphs.push_back(std::move(g));
    } else {
      graphs.push_back(generate_er(n, 0.15 + 0.7 * pick.unit(), seed));
    }
  }

  std::size_t fail_a = 0, fail_b = 0, fail_c = 0;
  for (const auto& g : graphs) {
    const std::size_t n = g.node_count();
    if (n >= 1 && is_r_robust_bruteforce(g, 1).robust != is_connected(g)) ++fail_a;
    const std::size_t best = max_robustness(g);
    if (best > vertex_connectivity_bruteforce(g) && n >= 2) ++fail_b;
    // Add every missing edge in turn.
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        auto edges = g.edges();
        edges.emplace_back(u, v);
        if (max_robustness(UGraph::from_edges(n, edges)) < best) ++fail_c;
      }
    }
  }
  const std::size_t k4 = max_robustness(oracle::complete(4));
  return {fail_a == 0 && fail_b == 0 && fail_c == 0 && k4 == 2,
          fmt::format("{} graphs: (a) {} failures (b) {} failures (c) {} failures; "
                      "(d) max_robustness(K4)={}",
                      graphs.size(), fail_a, fail_b, fail_c, k4)};
}

Verdict robustness_sample(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::robust_sample, 12, 2, 6, 200, threads);
  c.r = 2;
  const auto rows = run_robustness_sample(c);
  snaps.emplace_back("robust-sample n=12 r=2", csv_of(rows));
  Verdict v;
  for (const auto& row : rows) {
    v.pass = v.pass && row.robust_count <= row.connected_count;
    v.detail += fmt::format("K={}:{:.3f}/{:.3f} ", row.k, row.fraction_r_robust(),
                            row.fraction_r_connected());
  }
  const double at2 = rows.at(0).fraction_r_robust();
  const double at4 = rows.at(2).fraction_r_robust();
  v.pass = v.pass && at4 >= at2;
  v.detail = fmt::format("robust/2-connected fractions {}; K=4 {:.3f} >= K=2 {:.3f}",
                         v.detail, at4, at2);
  return v;
}

Verdict er_comparison(int threads, Snapshots& snaps) {
  auto c = config(ExperimentKind::er_compare, 5000, 6, 14, 1000, threads);
  c.gamma_spec.alpha = 0.4;
  const auto cmp = run_er_comparison(c, {.keep_trials = true});
  snaps.emplace_back("er-compare k-out", csv_of(cmp.kout, c.n));
  snaps.emplace_back("er-compare er", csv_of(cmp.er, c.n));
  int wins = 0;
  std::string parts;
  for (std::size_t j = 0; j < cmp.kout.rows.size(); ++j) {
    const auto& a = cmp.kout.rows[j];
    const auto& b = cmp.er.rows[j];
    wins += a.max_outside <= b.max_outside ? 1 : 0;
    parts += fmt::format(" K={}:{}/{}", a.k, a.max_outside, b.max_outside);
  }
  return {wins >= 7, fmt::format("K-out <= ER max_outside for {}/9 K (need 7):{}", wins, parts)};
}

using Experiment = std::function<Verdict(int, Snapshots&)>;

}  // namespace

int main() {
  const std::vector<std::pair<int, Experiment>> experiments = {
      {1, connectivity_transition}, {2, few_deletions},     {3, sublinear_deletions},
      {4, giant_bound},             {5, union_bound},       {8, robustness_sample},
      {9, er_comparison},
  };
  const std::vector<std::pair<int, std::function<Verdict()>>> pure = {
      {6, numerics_identities},
      {7, robustness_oracles},
  };
  const char* names[] = {"",
                         "connectivity phase transition",
                         "K=2 resilience to few deletions",
                         "sublinear-deletion connectivity",
                         "giant-component bound",
                         "cut union bound validity",
                         "numerical identities",
                         "robustness oracle properties",
                         "small-n robustness sampling",
                         "comparison with matched ER graphs",
                         "replay determinism"};

  std::vector<std::pair<int, Verdict>> verdicts;
  std::vector<Snapshots> first(11);
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = fn();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    v.detail += fmt::format(" ({:.1f}s)", took.count());
    return v;
  };
  for (const auto& [id, fn] : experiments) {
    verdicts.emplace_back(id, timed([&] { return fn(kFirstThreads, first[id]); }));
  }
  for (const auto& [id, fn] : pure) verdicts.emplace_back(id, timed(fn));

  verdicts.emplace_back(10, timed([&] {
    Verdict v;
    std::size_t compared = 0;
    for (const auto& [id, fn] : experiments) {
      Snapshots again;
      fn(kReplayThreads, again);
      for (std::size_t i = 0; i < again.size(); ++i) {
        ++compared;
        if (i >= first[id].size() || again[i] != first[id][i]) {
          v.pass = false;
          v.detail += fmt::format("mismatch in '{}'; ", again[i].first);
        }
      }
    }
    v.detail += fmt::format("{} CSV outputs rerun with {} threads (first run {})", compared,
                            kReplayThreads, kFirstThreads);
    return v;
  }));

  std::sort(verdicts.begin(), verdicts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int failures = 0;
  for (const auto& [id, v] : verdicts) {
    failures += v.pass ? 0 : 1;
    fmt::print("{} criterion {:>2} {}: {}\n", v.pass ? "PASS" : "FAIL", id, names[id], v.detail);
  }
  fmt::print("{} of {} criteria passed\n", verdicts.size() - failures, verdicts.size());
  return failures == 0 ? 0 : 1;
}
