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

#ifndef KOUT_NUMERICS_HPP_
#define KOUT_NUMERICS_HPP_

// Closed-form thresholds for random K-out graphs under random node
// deletion, and the numerical machinery behind their probability bounds.
// All logarithms are natural.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace kout {

// log C(a, b); -infinity when b < 0 or b > a.
double log_binomial(std::int64_t a, std::int64_t b);

// Exact C(a, b) while it fits in 64 bits, otherwise nullopt.
std::optional<std::uint64_t> exact_binomial(std::uint64_t a, std::uint64_t b);

// Complete beta function B(a, b) = (a-1)!(b-1)!/(a+b-1)! for integers >= 1.
double beta(std::int64_t a, std::int64_t b);

// Regularized incomplete beta I_x(a, b) for integers a, b >= 1, through the
// binomial-tail identity I_x(a, b) = P[Bin(a + b - 1, x) >= a].
double reg_inc_beta(double x, std::int64_t a, std::int64_t b);

// P[X <= a] for X ~ Bin(trials, p), evaluated as I_{1-p}(trials - a, a + 1).
double binomial_cdf(std::int64_t a, std::int64_t trials, double p);

struct AlphaStar {
  std::int64_t r = 0;
  double c = 0.0;
  double alpha_star = 0.0;
};

inline constexpr double kAlphaStarTolerance = 1e-10;

// Root of I_alpha(r, r) = c * alpha on (0, 1/2] by bisection. r = 1 is
// degenerate and raises UnsupportedParameter.
AlphaStar solve_alpha_star(std::int64_t r, double c);

enum class Theorem { t1, t2a, t2b, t3, t4, robust };

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

struct ThresholdQuery {
  std::optional<std::uint64_t> n;
  std::optional<double> alpha;
  std::optional<std::uint64_t> gamma;
  std::optional<std::uint64_t> lambda;
  std::optional<std::uint64_t> r;
};

struct ThresholdResult {
  double value = 0.0;  // minimum K, possibly fractional
  Theorem theorem = Theorem::t1;
};

// Connectivity with alpha * n deleted nodes: ln n / (1 - alpha - ln alpha).
double threshold_t1(double alpha, std::uint64_t n);
// Connectivity with o(sqrt n) deletions.
inline constexpr double threshold_t2a() { return 2.0; }
// Connectivity with gamma = o(n) deletions: ln gamma / (ln 2 + 1/2).
double threshold_t2b(std::uint64_t gamma);
// Fewer than lambda nodes outside the giant component, gamma = o(n).
double threshold_t3(std::uint64_t gamma, std::uint64_t lambda);
// Fewer than lambda nodes outside the giant component, gamma = alpha * n.
double threshold_t4(double alpha, std::uint64_t lambda, std::uint64_t n);
// Smallest lambda in [1, floor((1 - alpha) n / 3)] with threshold_t4 <= k.
std::optional<std::uint64_t> invert_t4(double alpha, std::uint64_t n, double k);
// r-robustness: 2r.
std::uint64_t threshold_robust(std::uint64_t r);

// Dispatches on the theorem; throws ParameterError if a needed field is
// missing or out of range.
ThresholdResult evaluate_threshold(Theorem t, const ThresholdQuery& q);

struct BoundBreakdown {
  double total = 0.0;
  std::vector<std::pair<std::uint64_t, double>> per_r_terms;
};

// Union bound on the probability that the survivor graph of K-out(n, k)
// with gamma deletions has a cut of size in [lambda, (n - gamma)/2]:
//   sum_r C(n-g, r) [C(g+r-1, k)/C(n-1, k)]^r [C(n-r-1, k)/C(n-1, k)]^(n-g-r).
BoundBreakdown cut_union_bound(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                               std::uint64_t lambda);

// C(n, m) (1/2 I_{(m-1)/(n-r)}(k-r+1, r))^m, the size-m term of the union
// bound on K-out(n, k) failing to be r-robust. Needs k >= 2r - 1.
double robustness_term_bound(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                             std::uint64_t r);

// Mean of the Poisson-binomial count of picks into the (a+1)-th node of an
// m-set: ((n - m) K - a (r - 1)) / (n - a - 1).
double poisson_binomial_mean(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                             std::uint64_t a, std::uint64_t r);

}  // namespace kout

#endif  // KOUT_NUMERICS_HPP_
