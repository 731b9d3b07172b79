#pragma once

#include <cstdint>
#include <vector>

#include "foxeq/errors.hpp"

namespace foxeq::specfun {

/// Mobius function values mu(1..limit) from a linear sieve. Immutable after
/// construction.
struct MobiusTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> values;   // 1-indexed; values[0] unused

    int operator[](std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

/// Truncation policy shared by the Gram series and the Mobius-exponential
/// series.
struct GramSeriesConfig {
    int max_terms = 200;
    double term_tolerance = 1e-16;
};

/// Linear sieve of mu(n) for n = 1..limit. Throws DomainError for limit = 0.
MobiusTable mobius_sieve(std::int64_t limit);

/// {t} = t - floor(t); callers only pass t >= 0.
double fractional_part(double t);

/// Si(x) = int_0^x sin(u)/u du for x >= 0 (odd extension for negative
/// arguments). Power series for small x, auxiliary f/g integrals beyond.
double sine_integral(double x);

/// R(e^u) via the Gram series 1 + sum_k u^k / (k k! zeta(k+1)), summed in
/// extended precision. Enforces the |u| <= 45 cancellation budget
/// (PrecisionError beyond it).
double riemann_R_exp(double u, const GramSeriesConfig& cfg = {});

/// Delta(y) = sum_n mu(n)/n e^{-y/n}, evaluated through the entire series
/// sum_{k>=1} (-y)^k / (k! zeta(k+1)). Requires 0 <= y <= 45.
double mobius_exponential(double y, const GramSeriesConfig& cfg = {});

} // namespace foxeq::specfun
