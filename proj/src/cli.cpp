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

#include "kout/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "kout/components.hpp"
#include "kout/edgelist.hpp"
#include "kout/error.hpp"
#include "kout/graph.hpp"
#include "kout/montecarlo.hpp"
#include "kout/numerics.hpp"
#include "kout/robustness.hpp"

namespace kout::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
std::optional<T> given(const CLI::Option* opt, const T& value) {
  return opt->count() ? std::optional<T>(value) : std::nullopt;
}

std::string fmt_real(double v) { return fmt::format("{:.10g}", v); }

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t gamma = 0;
  std::string out_path;
  CLI::Option* delete_opt = nullptr;
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  auto [graph, table] = generate_kout(a.n, a.k, RngSeed{a.seed});
  EdgeListHeader header;
  header.k = a.k;
  header.seed = a.seed;
  UGraph result = std::move(graph);
  if (a.delete_opt->count()) {
    // Deletion draws from its own sub-stream of the seed.
    auto [survivor, record] =
        delete_random_nodes(result, a.gamma, stream_seed(RngSeed{a.seed}, kDeletionStream));
    header.deleted = record.deleted;
    result = std::move(survivor);
  }
  if (a.out_path == "-") {
    export_edgelist(result, out, header);
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw IoError("cannot open " + a.out_path + " for writing");
    export_edgelist(result, file, header);
    if (!file) throw IoError("write to " + a.out_path + " failed");
    out << fmt::format("wrote {} nodes, {} edges to {}\n", result.node_count(),
                       result.edge_count(), a.out_path);
  }
  return kExitOk;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string in_path;
  std::uint64_t r = 1;
  bool json_out = false;
  CLI::Option* r_opt = nullptr;
};

UGraph read_graph(const std::string& path) {
  ImportedGraph imported;
  if (path == "-") {
    imported = import_edgelist(std::cin);
  } else {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path);
    imported = import_edgelist(file);
  }
  if (imported.graph.node_count() == 0) throw ParameterError("graph has no nodes");
  return std::move(imported.graph);
}

std::vector<NodeId> members(SubsetMask s) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < 32; ++i) {
    if (s.contains(i)) out.push_back(i);
  }
  return out;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const UGraph g = read_graph(a.in_path);
  const GraphStats stats = graph_stats(g);
  const ComponentLabeling labels = connected_components(g);
  json report = {
      {"n", stats.n},
      {"edges", stats.edge_count},
      {"mean_degree", stats.mean_degree},
      {"min_degree", stats.min_degree},
      {"max_degree", stats.max_degree},
      {"components", labels.component_count()},
      {"connected", labels.largest_size == stats.n},
      {"giant_size", labels.largest_size},
      {"outside", stats.n - labels.largest_size},
  };
  if (a.r_opt->count()) {
    const RobustnessVerdict verdict = is_r_robust_bruteforce(g, a.r);
    report["r"] = a.r;
    report["robust"] = verdict.robust;
    report["vertex_connectivity"] = vertex_connectivity_bruteforce(g);
    if (verdict.witness) {
      report["witness"] = {verdict.witness->first.bits, verdict.witness->second.bits};
    }
  }
  if (a.json_out) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << fmt::format("n={}\nedges={}\nmean_degree={:.6f}\nmin_degree={}\nmax_degree={}\n",
                     stats.n, stats.edge_count, stats.mean_degree, stats.min_degree,
                     stats.max_degree);
  out << fmt::format("components={}\nconnected={}\ngiant_size={}\noutside={}\n",
                     labels.component_count(), report["connected"].get<bool>(),
                     labels.largest_size, stats.n - labels.largest_size);
  if (a.r_opt->count()) {
    out << fmt::format("r={}\nrobust={}\nvertex_connectivity={}\n", a.r,
                       report["robust"].get<bool>(),
                       report["vertex_connectivity"].get<std::size_t>());
  }
  return kExitOk;
}

// ---- robustness -----------------------------------------------------------

struct RobustnessArgs {
  std::string in_path;
  std::uint64_t r = 1;
  bool json_out = false;
  CLI::Option* r_opt = nullptr;
};

int do_robustness(const RobustnessArgs& a, std::ostream& out) {
  const UGraph g = read_graph(a.in_path);
  if (g.node_count() > kMaxRobustnessNodes) {
    throw CapacityError(fmt::format("robustness checks support at most {} nodes",
                                    kMaxRobustnessNodes));
  }
  json report = {{"n", g.node_count()},
                 {"max_robustness", max_robustness(g)},
                 {"vertex_connectivity", vertex_connectivity_bruteforce(g)}};
  std::optional<RobustnessVerdict> verdict;
  if (a.r_opt->count()) {
    verdict = is_r_robust_bruteforce(g, a.r);
    report["r"] = a.r;
    report["robust"] = verdict->robust;
    if (verdict->witness) {
      report["witness"] = {members(verdict->witness->first), members(verdict->witness->second)};
    }
  }
  if (a.json_out) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << fmt::format("n={}\nmax_robustness={}\nvertex_connectivity={}\n", g.node_count(),
                     report["max_robustness"].get<std::size_t>(),
                     report["vertex_connectivity"].get<std::size_t>());
  if (verdict) {
    out << fmt::format("r={}\nrobust={}\n", a.r, verdict->robust);
    if (verdict->witness) {
      out << fmt::format("witness_s1={}\nwitness_s2={}\n",
                         fmt::join(members(verdict->witness->first), ","),
                         fmt::join(members(verdict->witness->second), ","));
    }
  }
  return kExitOk;
}

// ---- thresholds -----------------------------------------------------------

struct ThresholdArgs {
  std::string theorem;
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::uint64_t gamma = 0;
  std::uint64_t lambda = 0;
  std::uint64_t r = 0;
  double k = 0.0;
  bool json_out = false;
  CLI::Option *n_opt = nullptr, *alpha_opt = nullptr, *gamma_opt = nullptr,
              *lambda_opt = nullptr, *r_opt = nullptr, *k_opt = nullptr;
};

int do_thresholds(const ThresholdArgs& a, std::ostream& out) {
  const auto theorem = parse_theorem(a.theorem);
  if (!theorem) throw ParameterError("unknown theorem '" + a.theorem + "'");
  ThresholdQuery q;
  q.n = given(a.n_opt, a.n);
  q.alpha = given(a.alpha_opt, a.alpha);
  q.gamma = given(a.gamma_opt, a.gamma);
  q.lambda = given(a.lambda_opt, a.lambda);
  q.r = given(a.r_opt, a.r);
  const ThresholdResult result = evaluate_threshold(*theorem, q);

  json report = {{"theorem", theorem_name(*theorem)}, {"value", result.value}};
  json params = json::object();
  if (q.n) params["n"] = *q.n;
  if (q.alpha) params["alpha"] = *q.alpha;
  if (q.gamma) params["gamma"] = *q.gamma;
  if (q.lambda) params["lambda"] = *q.lambda;
  if (q.r) params["r"] = *q.r;
  report["params"] = params;
  if (*theorem == Theorem::t2b) {
    // Some published worked examples for this threshold equal formula + 1.
    report["value_plus_one"] = result.value + 1.0;
  }
  if (*theorem == Theorem::t4 && a.k_opt->count()) {
    const auto lambda = invert_t4(*q.alpha, *q.n, a.k);
    report["k"] = a.k;
    report["lambda_for_k"] = lambda ? json(*lambda) : json(nullptr);
  }

  if (a.json_out) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "theorem=" << theorem_name(*theorem) << '\n';
  out << "value=" << fmt_real(result.value) << '\n';
  if (report.contains("value_plus_one")) {
    out << "value_plus_one=" << fmt_real(report["value_plus_one"].get<double>()) << '\n';
  }
  for (const auto& [key, val] : params.items()) out << key << '=' << val.dump() << '\n';
  if (report.contains("lambda_for_k")) {
    out << "lambda_for_k="
        << (report["lambda_for_k"].is_null() ? std::string("none")
                                              : report["lambda_for_k"].dump())
        << '\n';
  }
  return kExitOk;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
  std::uint64_t n = 0, k = 0, gamma = 0, lambda = 0, m = 0, r = 0;
  bool terms = false;
  bool sum = false;
  bool json_out = false;
};

int do_bound_cut(const BoundArgs& a, std::ostream& out) {
  const BoundBreakdown b = cut_union_bound(a.n, a.k, a.gamma, a.lambda);
  json report = {{"bound", "cut"},
                 {"n", a.n},
                 {"k", a.k},
                 {"gamma", a.gamma},
                 {"lambda", a.lambda},
                 {"total", b.total}};
  if (a.terms) {
    json terms = json::array();
    for (const auto& [r, v] : b.per_r_terms) terms.push_back({{"r", r}, {"value", v}});
    report["terms"] = terms;
  }
  if (a.json_out) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "total=" << fmt_real(b.total) << '\n';
  if (a.terms) {
    for (const auto& [r, v] : b.per_r_terms) out << fmt::format("r={} term={}\n", r, fmt_real(v));
  }
  return kExitOk;
}

int do_bound_robust(const BoundArgs& a, std::ostream& out) {
  const double value = robustness_term_bound(a.n, a.m, a.k, a.r);
  json report = {{"bound", "robust-term"}, {"n", a.n}, {"m", a.m},
                 {"k", a.k},               {"r", a.r}, {"value", value}};
  double total = 0.0;
  if (a.sum) {
    for (std::uint64_t m = 1; m <= a.n / 2; ++m) total += robustness_term_bound(a.n, m, a.k, a.r);
    report["sum_over_m"] = total;
  }
  if (a.json_out) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "value=" << fmt_real(value) << '\n';
  if (a.sum) out << "sum_over_m=" << fmt_real(total) << '\n';
  return kExitOk;
}

// ---- experiment -----------------------------------------------------------

struct ExperimentArgs {
  std::string kind;
  std::string config_path;
  std::string out_dir;
  std::uint64_t n = 0, k = 0, k_min = 0, k_max = 0, gamma = 0, trials = 0, seed = 0, r = 0;
  double alpha = 0.0;
  int threads = 0;
  std::string deletion;
  bool coupled = false;
  bool write_trials = false;
  CLI::Option *kind_opt = nullptr, *n_opt = nullptr, *k_opt = nullptr, *k_min_opt = nullptr,
              *k_max_opt = nullptr, *gamma_opt = nullptr, *alpha_opt = nullptr,
              *trials_opt = nullptr, *seed_opt = nullptr, *r_opt = nullptr,
              *threads_opt = nullptr, *deletion_opt = nullptr, *coupled_opt = nullptr,
              *write_trials_opt = nullptr;
};

ExperimentConfig build_config(const ExperimentArgs& a, bool& write_trials) {
  json file = json::object();
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw IoError("cannot open " + a.config_path);
    try {
      file = json::parse(in);
    } catch (const json::parse_error& e) {
      throw FormatError(0, a.config_path + ": " + e.what());
    }
    if (!file.is_object()) throw FormatError(0, a.config_path + ": expected a JSON object");
  }
  auto pick = [&](CLI::Option* opt, const auto& flag_value, const char* key) {
    using T = std::decay_t<decltype(flag_value)>;
    if (opt->count()) return std::optional<T>(flag_value);
    if (file.contains(key)) {
      try {
        return std::optional<T>(file.at(key).get<T>());
      } catch (const json::exception& e) {
        throw FormatError(0, std::string("config key '") + key + "': " + e.what());
      }
    }
    return std::optional<T>();
  };

  ExperimentConfig c;
  const auto kind = pick(a.kind_opt, a.kind, "kind");
  if (!kind) throw ParameterError("missing --kind");
  const auto parsed = parse_kind(*kind);
  if (!parsed) throw ParameterError("unknown experiment kind '" + *kind + "'");
  c.kind = *parsed;

  const auto n = pick(a.n_opt, a.n, "n");
  if (!n) throw ParameterError("missing --n");
  c.n = *n;
  const auto k = pick(a.k_opt, a.k, "k");
  const auto k_min = pick(a.k_min_opt, a.k_min, "k_min");
  const auto k_max = pick(a.k_max_opt, a.k_max, "k_max");
  if (k && (k_min || k_max)) throw ParameterError("give --k or --k-min/--k-max, not both");
  if (k) {
    c.k_range = {*k, *k};
  } else if (k_min && k_max) {
    c.k_range = {*k_min, *k_max};
  } else {
    throw ParameterError("missing --k or --k-min/--k-max");
  }
  c.gamma_spec.count = pick(a.gamma_opt, a.gamma, "gamma");
  c.gamma_spec.alpha = pick(a.alpha_opt, a.alpha, "alpha");
  c.trials = pick(a.trials_opt, a.trials, "trials").value_or(1000);
  c.master_seed = RngSeed{pick(a.seed_opt, a.seed, "seed").value_or(0)};
  c.r = pick(a.r_opt, a.r, "r").value_or(1);
  c.threads = pick(a.threads_opt, a.threads, "threads").value_or(0);
  const auto deletion = pick(a.deletion_opt, a.deletion, "deletion").value_or("subset");
  if (deletion == "subset") {
    c.deletion = DeletionMode::uniform_subset;
  } else if (deletion == "bernoulli") {
    c.deletion = DeletionMode::bernoulli;
  } else {
    throw ParameterError("deletion must be 'subset' or 'bernoulli'");
  }
  c.coupled = pick(a.coupled_opt, a.coupled, "coupled").value_or(false);
  write_trials = pick(a.write_trials_opt, a.write_trials, "write_trials").value_or(false);
  validate(c);
  return c;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

void print_summary(std::ostream& out, const char* label, const std::vector<AggregateRow>& rows) {
  out << fmt::format("{:<8}{:>6}{:>8}{:>8}{:>12}{:>13}{:>14}\n", label, "k", "gamma", "trials",
                     "p_connected", "max_outside", "mean_outside");
  for (const auto& row : rows) {
    out << fmt::format("{:<8}{:>6}{:>8}{:>8}{:>12.4f}{:>13}{:>14.4f}\n", "", row.k, row.gamma,
                       row.trials, row.p_connected_hat, row.max_outside, row.mean_outside);
  }
}

int do_experiment(const ExperimentArgs& a, std::ostream& out) {
  bool write_trials = false;
  const ExperimentConfig c = build_config(a, write_trials);
  const std::filesystem::path dir(a.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  out << fmt::format("kind={} n={} k={}..{} gamma={} trials={} seed={}\n", kind_name(c.kind), c.n,
                     c.k_range.lo, c.k_range.hi, c.gamma_spec.resolve(c.n), c.trials,
                     c.master_seed.master);

  if (c.kind == ExperimentKind::robust_sample) {
    const auto rows = run_robustness_sample(c);
    auto f = open_out(dir / "robust.csv");
    write_robust_csv(f, rows);
    out << fmt::format("{:>6}{:>8}{:>16}{:>18}\n", "k", "trials", "frac_r_robust",
                       "frac_r_connected");
    for (const auto& row : rows) {
      out << fmt::format("{:>6}{:>8}{:>16.4f}{:>18.4f}\n", row.k, row.trials,
                         row.fraction_r_robust(), row.fraction_r_connected());
    }
    return kExitOk;
  }

  if (c.kind == ExperimentKind::er_compare) {
    std::ofstream kout_trials, er_trials;
    ErSweepOptions options;
    if (write_trials) {
      kout_trials = open_out(dir / "trials.csv");
      er_trials = open_out(dir / "trials_er.csv");
      write_trials_header(kout_trials);
      write_trials_header(er_trials);
      options.kout_sink = [&](const TrialRecord& rec) { write_trial_row(kout_trials, c.n, rec); };
      options.er_sink = [&](const TrialRecord& rec) { write_trial_row(er_trials, c.n, rec); };
    }
    const ErComparison result = run_er_comparison(c, options);
    auto f = open_out(dir / "aggregate.csv");
    write_aggregate_csv(f, result.kout.rows);
    auto g = open_out(dir / "aggregate_er.csv");
    write_aggregate_csv(g, result.er.rows);
    print_summary(out, "k-out", result.kout.rows);
    print_summary(out, "er", result.er.rows);
    return kExitOk;
  }

  std::ofstream trials_file;
  SweepOptions options;
  if (write_trials) {
    trials_file = open_out(dir / "trials.csv");
    write_trials_header(trials_file);
    options.sink = [&](const TrialRecord& rec) { write_trial_row(trials_file, c.n, rec); };
  }
  const SweepResult result = c.kind == ExperimentKind::giant ? run_giant_sweep(c, options)
                                                             : run_connectivity_sweep(c, options);
  auto f = open_out(dir / "aggregate.csv");
  write_aggregate_csv(f, result.rows);
  print_summary(out, "k-out", result.rows);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random K-out graphs under node deletion: generation, analysis, thresholds, "
               "bounds and Monte Carlo experiments",
               "kout"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a K-out graph and write an edge list");
  generate->add_option("--n", gen.n, "Node count")->required();
  generate->add_option("--k", gen.k, "Selections per node")->required();
  generate->add_option("--seed", gen.seed, "64-bit seed");
  gen.delete_opt = generate->add_option("--delete", gen.gamma, "Delete this many random nodes");
  generate->add_option("--out", gen.out_path, "Output path, '-' for stdout")->required();

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Connectivity and robustness of an edge list");
  analyze->add_option("--in", ana.in_path, "Edge-list path, '-' for stdin")->required();
  ana.r_opt = analyze->add_option("--r", ana.r, "Also check r-robustness (n <= 16)");
  analyze->add_flag("--json", ana.json_out, "JSON output");

  RobustnessArgs rob;
  auto* robustness = app.add_subcommand("robustness", "Brute-force r-robustness of an edge list");
  robustness->add_option("--in", rob.in_path, "Edge-list path (n <= 16), '-' for stdin")
      ->required();
  rob.r_opt = robustness->add_option("--r", rob.r, "Check this r and report a witness");
  robustness->add_flag("--json", rob.json_out, "JSON output");

  ThresholdArgs thr;
  auto* thresholds = app.add_subcommand("thresholds", "Evaluate a threshold function");
  thresholds->add_option("--theorem", thr.theorem, "t1 | t2a | t2b | t3 | t4 | robust")
      ->required();
  thr.n_opt = thresholds->add_option("--n", thr.n);
  thr.alpha_opt = thresholds->add_option("--alpha", thr.alpha);
  thr.gamma_opt = thresholds->add_option("--gamma", thr.gamma);
  thr.lambda_opt = thresholds->add_option("--lambda", thr.lambda);
  thr.r_opt = thresholds->add_option("--r", thr.r);
  thr.k_opt = thresholds->add_option("--k", thr.k, "t4 only: smallest lambda reachable with K");
  thresholds->add_flag("--json", thr.json_out, "JSON output");

  BoundArgs bnd;
  auto* bound = app.add_subcommand("bound", "Evaluate a probability upper bound");
  bound->require_subcommand(1);
  auto* cut = bound->add_subcommand("cut", "Union bound on a cut of size >= lambda");
  cut->add_option("--n", bnd.n)->required();
  cut->add_option("--k", bnd.k)->required();
  cut->add_option("--gamma", bnd.gamma)->required();
  cut->add_option("--lambda", bnd.lambda)->required();
  cut->add_flag("--terms", bnd.terms, "Print the per-size terms");
  cut->add_flag("--json", bnd.json_out, "JSON output");
  auto* robust_term = bound->add_subcommand("robust-term", "Size-m term of the robustness bound");
  robust_term->add_option("--n", bnd.n)->required();
  robust_term->add_option("--m", bnd.m)->required();
  robust_term->add_option("--k", bnd.k)->required();
  robust_term->add_option("--r", bnd.r)->required();
  robust_term->add_flag("--sum", bnd.sum, "Also print the sum over m = 1..floor(n/2)");
  robust_term->add_flag("--json", bnd.json_out, "JSON output");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo sweep over K");
  exp.kind_opt = experiment->add_option("--kind", exp.kind,
                                        "connectivity | giant | er-compare | robust-sample");
  experiment->add_option("--config", exp.config_path, "JSON config; flags override its keys");
  exp.n_opt = experiment->add_option("--n", exp.n);
  exp.k_opt = experiment->add_option("--k", exp.k, "Single K");
  exp.k_min_opt = experiment->add_option("--k-min", exp.k_min);
  exp.k_max_opt = experiment->add_option("--k-max", exp.k_max);
  exp.gamma_opt = experiment->add_option("--gamma", exp.gamma, "Deleted node count");
  exp.alpha_opt = experiment->add_option("--alpha", exp.alpha, "Deleted fraction of n");
  exp.trials_opt = experiment->add_option("--trials", exp.trials, "Trials per K (default 1000)");
  exp.seed_opt = experiment->add_option("--seed", exp.seed, "Master seed (default 0)");
  exp.r_opt = experiment->add_option("--r", exp.r, "robust-sample: r");
  exp.threads_opt = experiment->add_option("--threads", exp.threads, "Worker threads");
  exp.deletion_opt = experiment->add_option("--deletion", exp.deletion, "subset | bernoulli");
  exp.coupled_opt = experiment->add_flag("--coupled", exp.coupled, "Share samples across K");
  exp.write_trials_opt = experiment->add_flag("--trials-csv", exp.write_trials,
                                              "Also write per-trial records");
  experiment->add_option("--out-dir", exp.out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (*generate) return do_generate(gen, out);
    if (*analyze) return do_analyze(ana, out);
    if (*robustness) return do_robustness(rob, out);
    if (*thresholds) return do_thresholds(thr, out);
    if (*cut) return do_bound_cut(bnd, out);
    if (*robust_term) return do_bound_robust(bnd, out);
    if (*experiment) return do_experiment(exp, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitFormat;
  }
  return kExitParameter;
}

}  // namespace kout::cli
