#pragma once

#include <cstdint>

namespace poeqtl {

/// Thread-safe log-gamma (always the log of |Gamma(x)|, x > 0 here).
double log_gamma(double x);

/// log(1 + exp(x)) without overflow for large |x|.
double log1p_exp(double x);

/// Numerically safe inverse-logit; exact 0/1 never returned for finite x
/// until the result underflows (|x| ~ 745).
double logistic(double x);

/// log of the binomial coefficient C(n, k) for 0 <= k <= n.
double log_choose(double n, double k);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// Upper tail P(X > x) of a chi-square distribution with df degrees of freedom.
double chisq_sf(double x, double df);

/// splitmix64 step; used to derive independent seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t state);

/// Deterministic seed for stream (a, b) of a master seed. Used to make
/// replicate-level results independent of execution order and thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

} // namespace poeqtl
