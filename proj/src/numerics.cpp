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

#include "kout/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kout/error.hpp"

namespace kout {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// floor((1 - alpha) n / 3), tolerant of representation error in alpha.
std::uint64_t t4_lambda_cap(double alpha, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      std::floor((1.0 - alpha) * static_cast<double>(n) / 3.0 + 1e-9));
}

// P[Bin(trials, x) >= a] with q = 1 - x supplied separately so that callers
// holding 1 - x exactly do not lose it to rounding. Sums whichever tail lies
// away from the mode, starting at its largest term.
double binomial_upper_tail(std::int64_t trials, std::int64_t a, double x, double q) {
  if (a <= 0) return 1.0;
  if (a > trials) return 0.0;
  if (x <= 0.0) return 0.0;
  if (q <= 0.0) return 1.0;

  auto term_at = [&](std::int64_t j) {
    const double log_t = log_binomial(trials, j) + static_cast<double>(j) * std::log(x) +
                         static_cast<double>(trials - j) * std::log(q);
    return std::exp(log_t);
  };
  const double odds = x / q;
  const double mean = static_cast<double>(trials) * x;

  if (static_cast<double>(a) >= mean) {
    // Upper tail j = a..trials; terms fall once j passes the mode.
    const double start = term_at(a);
    double sum = 1.0;
    double ratio = 1.0;
    for (std::int64_t j = a; j < trials; ++j) {
      ratio *= static_cast<double>(trials - j) / static_cast<double>(j + 1) * odds;
      sum += ratio;
      if (ratio < sum * 1e-18) break;
    }
    return std::min(1.0, start * sum);
  }
  // Lower tail j = a-1 down to 0, then complement.
  const double start = term_at(a - 1);
  double sum = 1.0;
  double ratio = 1.0;
  for (std::int64_t j = a - 1; j > 0; --j) {
    ratio *= static_cast<double>(j) / static_cast<double>(trials - j + 1) / odds;
    sum += ratio;
    if (ratio < sum * 1e-18) break;
  }
  return std::max(0.0, 1.0 - start * sum);
}

void require_positive(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw ParameterError("beta parameters must be positive integers");
}

}  // namespace

std::optional<std::uint64_t> exact_binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

double log_binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return kNegInf;
  if (auto exact = exact_binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b))) {
    return std::log(static_cast<double>(*exact));
  }
  return std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
         std::lgamma(static_cast<double>(a - b) + 1.0);
}

double beta(std::int64_t a, std::int64_t b) {
  require_positive(a, b);
  // B(a, b) = 1 / ((a + b - 1) C(a + b - 2, a - 1)).
  if (auto c = exact_binomial(static_cast<std::uint64_t>(a + b - 2),
                              static_cast<std::uint64_t>(a - 1))) {
    return 1.0 / (static_cast<double>(a + b - 1) * static_cast<double>(*c));
  }
  return std::exp(std::lgamma(static_cast<double>(a)) + std::lgamma(static_cast<double>(b)) -
                  std::lgamma(static_cast<double>(a + b)));
}

double reg_inc_beta(double x, std::int64_t a, std::int64_t b) {
  require_positive(a, b);
  if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("incomplete beta argument must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return binomial_upper_tail(a + b - 1, a, x, 1.0 - x);
}

double binomial_cdf(std::int64_t a, std::int64_t trials, double p) {
  if (trials < 0 || a < 0 || a > trials) throw ParameterError("binomial CDF needs 0 <= a <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1]");
  if (a == trials) return 1.0;
  // F(a; n, p) = I_{1-p}(n - a, a + 1) = P[Bin(n, 1 - p) >= n - a].
  return binomial_upper_tail(trials, trials - a, 1.0 - p, p);
}

AlphaStar solve_alpha_star(std::int64_t r, double c) {
  if (r == 1) {
    throw UnsupportedParameter("alpha* is degenerate for r = 1 (I_alpha(1, 1) = alpha)");
  }
  if (r < 1) throw ParameterError("r must be at least 2");
  if (!(c > 0.0 && c <= 1.0)) throw ParameterError("c must lie in (0, 1]");

  auto f = [&](double alpha) { return reg_inc_beta(alpha, r, r) - c * alpha; };
  double hi = 0.5;
  // f(1/2) = (1 - c)/2 >= 0; equality means the root is 1/2 itself.
  if (std::abs(f(hi)) <= 1e-15) return AlphaStar{r, c, hi};
  double lo = 0.25;
  while (f(lo) >= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw ParameterError("could not bracket alpha*");
  }
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return AlphaStar{r, c, 0.5 * (lo + hi)};
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1: return "t1";
    case Theorem::t2a: return "t2a";
    case Theorem::t2b: return "t2b";
    case Theorem::t3: return "t3";
    case Theorem::t4: return "t4";
    case Theorem::robust: return "robust";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::t1, Theorem::t2a, Theorem::t2b, Theorem::t3, Theorem::t4,
                    Theorem::robust}) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

double threshold_t1(double alpha, std::uint64_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (n < 2) throw ParameterError("n must be at least 2");
  return std::log(static_cast<double>(n)) / (1.0 - alpha - std::log(alpha));
}

double threshold_t2b(std::uint64_t gamma) {
  if (gamma < 2) throw ParameterError("gamma must be at least 2");
  return std::log(static_cast<double>(gamma)) / (std::log(2.0) + 0.5);
}

double threshold_t3(std::uint64_t gamma, std::uint64_t lambda) {
  if (lambda < 1) throw ParameterError("lambda must be at least 1");
  return 1.0 + std::log1p(static_cast<double>(gamma) / static_cast<double>(lambda)) /
                   (std::log(2.0) + 0.5);
}

double threshold_t4(double alpha, std::uint64_t lambda, std::uint64_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (lambda < 1 || lambda > t4_lambda_cap(alpha, n)) {
    throw ParameterError("lambda must lie in [1, floor((1 - alpha) n / 3)]");
  }
  const double numerator =
      std::log1p(alpha * static_cast<double>(n) / static_cast<double>(lambda)) + alpha +
      std::log1p(-alpha);
  const double denominator = (1.0 - alpha) / 2.0 - std::log((1.0 + alpha) / 2.0);
  return 1.0 + numerator / denominator;
}

std::optional<std::uint64_t> invert_t4(double alpha, std::uint64_t n, double k) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(k > 1.0)) return std::nullopt;
  const std::uint64_t cap = t4_lambda_cap(alpha, n);
  if (cap < 1 || threshold_t4(alpha, cap, n) > k) return std::nullopt;
  // threshold_t4 decreases in lambda.
  std::uint64_t lo = 1;
  std::uint64_t hi = cap;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (threshold_t4(alpha, mid, n) <= k) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::uint64_t threshold_robust(std::uint64_t r) {
  if (r < 1) throw ParameterError("r must be at least 1");
  return 2 * r;
}

ThresholdResult evaluate_threshold(Theorem t, const ThresholdQuery& q) {
  auto need = [](const auto& field, const char* name) {
    if (!field) throw ParameterError(std::string("missing parameter --") + name);
    return *field;
  };
  ThresholdResult out;
  out.theorem = t;
  switch (t) {
    case Theorem::t1:
      out.value = threshold_t1(need(q.alpha, "alpha"), need(q.n, "n"));
      break;
    case Theorem::t2a:
      out.value = threshold_t2a();
      break;
    case Theorem::t2b:
      out.value = threshold_t2b(need(q.gamma, "gamma"));
      break;
    case Theorem::t3:
      out.value = threshold_t3(need(q.gamma, "gamma"), need(q.lambda, "lambda"));
      break;
    case Theorem::t4:
      // Below zero no K is ruled out.
      out.value = std::max(
          0.0, threshold_t4(need(q.alpha, "alpha"), need(q.lambda, "lambda"), need(q.n, "n")));
      break;
    case Theorem::robust:
      out.value = static_cast<double>(threshold_robust(need(q.r, "r")));
      break;
  }
  return out;
}

BoundBreakdown cut_union_bound(std::uint64_t n, std::uint64_t k, std::uint64_t gamma,
                               std::uint64_t lambda) {
  if (k < 1 || k >= n) throw ParameterError("k must lie in [1, n - 1]");
  if (gamma >= n) throw ParameterError("gamma must be below n");
  const std::uint64_t survivors = n - gamma;
  const std::uint64_t last = survivors / 2;
  if (lambda < 1 || lambda > last) {
    throw ParameterError("lambda must lie in [1, floor((n - gamma) / 2)]");
  }
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  const auto gg = static_cast<std::int64_t>(gamma);
  const double log_all = log_binomial(nn - 1, kk);

  BoundBreakdown out;
  for (std::uint64_t r = lambda; r <= last; ++r) {
    const auto rr = static_cast<std::int64_t>(r);
    const double inside = log_binomial(gg + rr - 1, kk) - log_all;
    const double outside = log_binomial(nn - rr - 1, kk) - log_all;
    double term = 0.0;
    if (inside != kNegInf && outside != kNegInf) {
      term = std::exp(log_binomial(static_cast<std::int64_t>(survivors), rr) +
                      static_cast<double>(r) * inside +
                      static_cast<double>(survivors - r) * outside);
    }
    out.per_r_terms.emplace_back(r, term);
    out.total += term;
  }
  return out;
}

double robustness_term_bound(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                             std::uint64_t r) {
  if (r < 1) throw ParameterError("r must be at least 1");
  if (m < 1 || m > n / 2) throw ParameterError("m must lie in [1, floor(n / 2)]");
  if (k + 1 < 2 * r) throw UnsupportedParameter("robustness term bound needs k >= 2r - 1");
  if (r >= n) throw ParameterError("r must be below n");
  const double x = static_cast<double>(m - 1) / static_cast<double>(n - r);
  if (x > 1.0) throw ParameterError("(m - 1)/(n - r) exceeds 1");
  const double inc = reg_inc_beta(x, static_cast<std::int64_t>(k - r + 1),
                                  static_cast<std::int64_t>(r));
  if (inc == 0.0) return 0.0;
  return std::exp(log_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) +
                  static_cast<double>(m) * std::log(0.5 * inc));
}

double poisson_binomial_mean(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                             std::uint64_t a, std::uint64_t r) {
  if (a + 1 >= n) throw ParameterError("a = n - 1 makes the mean undefined");
  if (a < 1 || a + 1 > m || 2 * (m - 1) > n) {
    throw ParameterError("need 1 <= a <= m - 1 <= n / 2");
  }
  if (r < 1) throw ParameterError("r must be at least 1");
  const double numerator = static_cast<double>(n - m) * static_cast<double>(k) -
                           static_cast<double>(a) * static_cast<double>(r - 1);
  return numerator / static_cast<double>(n - a - 1);
}

}  // namespace kout
