#include "foxeq/specfun.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "foxeq/detail/gauss.hpp"
#include "foxeq/detail/wide.hpp"

namespace foxeq::specfun {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBudget = 45.0;   // |u| cap for the entire-series evaluations

double series_peak(double u) {
    const double a = std::abs(u);
    return std::exp(a) / std::sqrt(2.0 * kPi * std::max(a, 1.0));
}

[[noreturn]] void throw_budget(const char* fn, double u) {
    const int peak_exp = static_cast<int>(std::log10(series_peak(u)));
    throw PrecisionError(std::string(fn) + ": |argument| = " + std::to_string(std::abs(u)) +
                         " exceeds the cancellation budget of 45 (peak term ~1e" +
                         std::to_string(peak_exp) + ", roughly " + std::to_string(peak_exp) +
                         " significant digits cancelled)");
}

} // namespace

MobiusTable mobius_sieve(std::int64_t limit) {
    if (limit < 1) throw DomainError("mobius_sieve: limit must be >= 1");
    MobiusTable t;
    t.limit = limit;
    t.values.assign(static_cast<std::size_t>(limit) + 1, 0);
    t.values[1] = 1;
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            t.values[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            const std::int64_t m = p * i;
            if (m > limit) break;
            composite[static_cast<std::size_t>(m)] = true;
            if (i % p == 0) {
                t.values[static_cast<std::size_t>(m)] = 0;
                break;
            }
            t.values[static_cast<std::size_t>(m)] =
                static_cast<std::int8_t>(-t.values[static_cast<std::size_t>(i)]);
        }
    }
    return t;
}

double fractional_part(double t) {
    return t - std::floor(t);
}

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x == 0.0) return 0.0;
    if (x <= 6.0) {
        // sum_k (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
        double term = x;
        double sum = x;
        const double x2 = x * x;
        for (int k = 1; k < 60; ++k) {
            term *= -x2 / static_cast<double>(2 * k * (2 * k + 1));
            const double add = term / static_cast<double>(2 * k + 1);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    // Si(x) = pi/2 - f cos x - g sin x with f + i g = int_0^inf e^{-x t}/(1 - i t) dt.
    const double cap = 45.0 / x;
    auto integrand = [x](double t) {
        return std::exp(-x * t) / std::complex<double>(1.0, -t);
    };
    std::complex<double> h{};
    const int panels = 8;
    for (int i = 0; i < panels; ++i) {
        const double a = cap * i / panels;
        const double b = cap * (i + 1) / panels;
        h += detail::integrate_panel<std::complex<double>>(integrand, a, b, 1e-16).value;
    }
    return 0.5 * kPi - h.real() * std::cos(x) - h.imag() * std::sin(x);
}

double riemann_R_exp(double u, const GramSeriesConfig& cfg) {
    if (std::abs(u) > kBudget) throw_budget("riemann_R_exp", u);
    using detail::wide;
    const wide uw = u;
    wide sum = 1;
    wide term = 1;   // u^k / k!
    int quiet = 0;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        term *= uw / k;
        const wide add = term / (k * detail::zeta_integer_wide(k + 1));
        sum += add;
        const double mag = std::abs(static_cast<double>(add));
        if (k > std::abs(u) && mag < cfg.term_tolerance * std::abs(static_cast<double>(sum)) + 1e-300) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    return static_cast<double>(sum);
}

double mobius_exponential(double y, const GramSeriesConfig& cfg) {
    if (y < 0.0) throw DomainError("mobius_exponential: requires y >= 0");
    if (y > kBudget) throw_budget("mobius_exponential", y);
    if (y == 0.0) return 0.0;
    using detail::wide;
    const wide yw = y;
    wide sum = 0;
    wide term = 1;   // (-y)^k / k!
    int quiet = 0;
    for (int k = 1; k <= std::max(cfg.max_terms, 40); ++k) {
        term *= -yw / k;
        const wide add = term / detail::zeta_integer_wide(k + 1);
        sum += add;
        const double mag = std::abs(static_cast<double>(add));
        if (k > y && mag < cfg.term_tolerance * (std::abs(static_cast<double>(sum)) + 1e-300)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    return static_cast<double>(sum);
}

} // namespace foxeq::specfun
