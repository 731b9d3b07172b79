#include "foxeq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "foxeq/detail/gauss.hpp"

namespace foxeq::quad {
namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const QuadratureConfig& cfg) {
    if (cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0)
        throw DomainError("quadrature config: tolerances must be positive");
    if (cfg.max_subdivisions < 1 || cfg.oscillatory_max_segments < 1 || cfg.acceleration_order < 1)
        throw DomainError("quadrature config: caps must be >= 1");
}

// Wynn epsilon extrapolation of a partial-sum sequence. Returns the deepest
// stable even-column entry together with a step-difference error estimate.
struct EpsEstimate {
    double value;
    double error;
};

EpsEstimate epsilon_extrapolate(const std::vector<double>& partials, int max_order) {
    const int n = static_cast<int>(partials.size());
    if (n == 1) return {partials[0], std::abs(partials[0])};
    std::vector<double> prev2(partials);              // column k-2 (starts as eps_0)
    std::vector<double> prev1;                        // column k-1
    prev1.reserve(partials.size());
    // eps_{-1} = 0, so the first odd column is 1 / (S_{i+1} - S_i).
    double best = partials[n - 1];
    double best_prev = partials[n - 2];
    for (int i = 0; i + 1 < n; ++i) {
        const double d = prev2[i + 1] - prev2[i];
        prev1.push_back(std::abs(d) < 1e-305 ? 1e305 : 1.0 / d);
    }
    const int max_cols = std::min(2 * max_order, n - 1);
    for (int k = 2; k <= max_cols; ++k) {
        std::vector<double> cur;
        cur.reserve(prev1.size());
        bool bail = false;
        for (std::size_t i = 0; i + 1 < prev1.size(); ++i) {
            const double d = prev1[i + 1] - prev1[i];
            if (std::abs(d) < 1e-305) { bail = true; break; }
            cur.push_back(prev2[i + 1] + 1.0 / d);
        }
        if (bail || cur.empty()) break;
        if (k % 2 == 0) {
            best_prev = best;
            best = cur.back();
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return {best, std::abs(best - best_prev)};
}

// Shared zero-split + acceleration loop for the sine/cosine transforms.
// boundary(k) must return the k-th split point, ascending from boundary(0)=0.
template <typename Boundary>
IntegralResult oscillatory_series(const RealFn& weighted, Boundary boundary,
                                  const QuadratureConfig& cfg, const char* name) {
    IntegralResult out;
    std::vector<double> partials;
    double raw = 0.0;
    double quad_err = 0.0;
    EpsEstimate est{0.0, 1e300};
    int stable = 0;
    int tiny = 0;
    for (int k = 0; k < cfg.oscillatory_max_segments; ++k) {
        const double a = boundary(k);
        const double b = boundary(k + 1);
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(raw));
        auto panel = detail::integrate_panel<double>(weighted, a, b, target / 64.0, 40);
        out.evaluations += panel.evaluations;
        quad_err += panel.error;
        raw += panel.value;
        partials.push_back(raw);
        // Fast-decay shortcut: the series terminated on its own.
        if (std::abs(panel.value) < 0.03 * target) {
            if (++tiny >= 3) {
                out.value = raw;
                out.error_estimate = quad_err + std::abs(panel.value);
                return out;
            }
        } else {
            tiny = 0;
        }
        if (k >= 5) {
            const EpsEstimate next = epsilon_extrapolate(partials, cfg.acceleration_order);
            const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(next.value));
            if (std::abs(next.value - est.value) < 0.25 * tol && next.error < tol) {
                if (++stable >= 2) {
                    out.value = next.value;
                    out.error_estimate = next.error + quad_err;
                    return out;
                }
            } else {
                stable = 0;
            }
            est = next;
        }
    }
    throw AccuracyError(std::string(name) + ": segment cap exceeded before convergence",
                        est.value, est.error + quad_err);
}

} // namespace

IntegralResult integrate_adaptive(const RealFn& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    validate(cfg);
    auto r = detail::integrate_panel<double>(f, a, b, cfg.abs_tol, 32);
    if (!r.converged)
        throw AccuracyError("integrate_adaptive: did not converge", r.value, r.error);
    return {r.value, r.error, r.evaluations};
}

IntegralResult integrate_semi_infinite(const RealFn& f, const QuadratureConfig& cfg) {
    validate(cfg);
    auto mapped = [&f](double u) {
        const double t = std::exp(u);
        return f(t) * t;
    };
    IntegralResult out;
    double quad_err = 0.0;
    double tail = 0.0;
    int used = 0;
    for (const int dir : {+1, -1}) {
        int tiny = 0;
        for (int k = 0;; ++k) {
            if (++used > cfg.max_subdivisions)
                throw AccuracyError("integrate_semi_infinite: panel budget exhausted",
                                    out.value, quad_err);
            const double a = dir > 0 ? static_cast<double>(k) : -static_cast<double>(k + 1);
            const double b = a + 1.0;
            const double thr = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) / 16.0;
            auto panel = detail::integrate_panel<double>(mapped, a, b, thr / 4.0, 32);
            out.evaluations += panel.evaluations;
            quad_err += panel.error;
            out.value += panel.value;
            if (std::abs(panel.value) < thr) {
                if (++tiny >= 3) {
                    tail += 3.0 * thr;
                    break;
                }
            } else {
                tiny = 0;
            }
        }
    }
    out.error_estimate = quad_err + tail;
    return out;
}

IntegralResult fourier_sine_transform(const RealFn& f, double x, const QuadratureConfig& cfg) {
    validate(cfg);
    if (x <= 0.0) throw DomainError("fourier_sine_transform: requires x > 0");
    const double period = kPi / x;
    auto weighted = [&f, x](double t) { return std::sin(x * t) * f(t); };
    return oscillatory_series(weighted, [period](int k) { return period * k; }, cfg,
                              "fourier_sine_transform");
}

IntegralResult fourier_cosine_transform(const RealFn& f, double x, const QuadratureConfig& cfg) {
    validate(cfg);
    if (x <= 0.0) throw DomainError("fourier_cosine_transform: requires x > 0");
    const double half = 0.5 * kPi / x;
    auto weighted = [&f, x](double t) { return std::cos(x * t) * f(t); };
    auto boundary = [half](int k) { return k == 0 ? 0.0 : half * (2 * k - 1); };
    return oscillatory_series(weighted, boundary, cfg, "fourier_cosine_transform");
}

ComplexIntegralResult mellin_transform_numeric(const RealFn& f, std::complex<double> s,
                                               const QuadratureConfig& cfg) {
    validate(cfg);
    ComplexIntegralResult out;
    double quad_err = 0.0;
    double tail = 0.0;
    // side +1: int_1^inf t^{s-1} f(t) dt = int_0^inf e^{s u} f(e^u) du
    // side -1: int_0^1            ...    = int_0^inf e^{-s u} f(e^{-u}) du
    for (const int side : {+1, -1}) {
        auto mapped = [&f, s, side](double u) {
            const double t = std::exp(side * u);
            return std::exp(static_cast<double>(side) * s * u) * f(t);
        };
        int tiny = 0;
        std::vector<double> history;
        for (int k = 0;; ++k) {
            if (k > cfg.max_subdivisions)
                throw AccuracyError("mellin_transform_numeric: panel budget exhausted",
                                    std::abs(out.value), quad_err);
            const double thr =
                std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) / 16.0;
            auto panel = detail::integrate_panel<std::complex<double>>(
                mapped, static_cast<double>(k), static_cast<double>(k + 1), thr / 4.0, 32);
            out.evaluations += panel.evaluations;
            quad_err += panel.error;
            out.value += panel.value;
            const double mag = std::abs(panel.value);
            history.push_back(mag);
            if (k >= 8 && mag > cfg.abs_tol && mag > 4.0 * history[static_cast<std::size_t>(k - 4)] &&
                history[static_cast<std::size_t>(k - 4)] > cfg.abs_tol)
                throw DomainError("mellin_transform_numeric: divergent panel growth; "
                                  "Re(s) outside the convergence strip");
            if (mag < thr) {
                if (++tiny >= 3) {
                    tail += 3.0 * thr;
                    break;
                }
            } else {
                tiny = 0;
            }
        }
    }
    out.error_estimate = quad_err + tail;
    return out;
}

IntegralResult mellin_sine_regularized(double s, double x, const QuadratureConfig& cfg) {
    validate(cfg);
    if (s <= -1.0 || s >= 1.0)
        throw DomainError("mellin_sine_regularized: requires -1 < s < 1");
    if (x <= 0.0) throw DomainError("mellin_sine_regularized: requires x > 0");
    // Damped transforms F(eps), Richardson-extrapolated to eps = 0 (the value
    // is analytic in eps near 0, so a halving ladder eliminates eps^k terms).
    constexpr int kLevels = 4;
    double ladder[kLevels];
    IntegralResult out;
    double eps = 0.2;
    double quad_err = 0.0;
    for (int i = 0; i < kLevels; ++i, eps *= 0.5) {
        auto damped = [s, eps](double t) { return std::pow(t, s - 1.0) * std::exp(-eps * t); };
        auto r = fourier_sine_transform(damped, x, cfg);
        out.evaluations += r.evaluations;
        quad_err = std::max(quad_err, r.error_estimate);
        ladder[i] = r.value;
    }
    double table[kLevels][kLevels];
    for (int i = 0; i < kLevels; ++i) table[i][0] = ladder[i];
    double scale = 1.0;
    for (int j = 1; j < kLevels; ++j) {
        scale *= 2.0;
        for (int i = j; i < kLevels; ++i)
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (scale - 1.0);
    }
    out.value = table[kLevels - 1][kLevels - 1];
    out.error_estimate =
        std::abs(table[kLevels - 1][kLevels - 1] - table[kLevels - 1][kLevels - 2]) + quad_err;
    return out;
}

IntegralResult inverse_mellin_line(const ComplexFn& F, const ContourSpec& spec, double x,
                                   const QuadratureConfig& cfg) {
    validate(cfg);
    if (spec.height_T <= 0.0) throw DomainError("inverse_mellin_line: height_T must be > 0");
    if (spec.panel_count < 8) throw DomainError("inverse_mellin_line: panel_count must be >= 8");
    if (x <= 0.0) throw DomainError("inverse_mellin_line: requires x > 0");
    const double logx = std::log(x);
    const double c = spec.abscissa_c;
    auto integrand = [&F, c, logx](double tau) {
        const std::complex<double> s(c, tau);
        return F(s) * std::exp(-s * logx);
    };
    const double width = spec.height_T / spec.panel_count;
    const double panel_tol = cfg.abs_tol * 2.0 * kPi / (2.0 * spec.panel_count);
    std::complex<double> acc{};
    double quad_err = 0.0;
    double tail = 0.0;
    long evals = 0;
    for (const int dir : {+1, -1}) {
        double last = 0.0;
        for (int k = 0; k < spec.panel_count; ++k) {
            const double a = dir > 0 ? k * width : -(k + 1) * width;
            const double b = a + width;
            auto panel = detail::integrate_panel<std::complex<double>>(integrand, a, b,
                                                                       panel_tol, 24);
            evals += panel.evaluations;
            quad_err += panel.error;
            acc += panel.value;
            last = std::abs(panel.value);
        }
        tail += last;
    }
    IntegralResult out;
    out.value = acc.real() / (2.0 * kPi);
    const double imag_residue = std::abs(acc.imag()) / (2.0 * kPi);
    out.error_estimate = quad_err / (2.0 * kPi) + imag_residue + tail / (2.0 * kPi);
    out.evaluations = evals;
    const double sym_tol = std::max(100.0 * cfg.abs_tol, 1e-6 * std::max(1.0, std::abs(out.value)));
    if (imag_residue > sym_tol)
        throw SymmetryError("inverse_mellin_line: imaginary residue " +
                            std::to_string(imag_residue) + " exceeds tolerance (integrand not "
                            "conjugate-symmetric?)");
    return out;
}

IntegralResult fractional_weighted_integral(const RealFn& g, const QuadratureConfig& cfg,
                                            double decay_rate) {
    validate(cfg);
    if (decay_rate <= 0.0)
        throw DomainError("fractional_weighted_integral: decay_rate must be > 0");
    IntegralResult out;
    double quad_err = 0.0;
    {
        // {t}/t = 1 on (0, 1)
        auto first = detail::integrate_panel<double>(g, 0.0, 1.0, cfg.abs_tol / 8.0, 32);
        out.evaluations += first.evaluations;
        quad_err += first.error;
        out.value += first.value;
    }
    const int cap = std::max(cfg.max_subdivisions / 4, 64);
    for (int k = 1;; ++k) {
        if (k > cap)
            throw AccuracyError("fractional_weighted_integral: tail bound never met",
                                out.value, quad_err);
        const double kk = static_cast<double>(k);
        auto weighted = [&g, kk](double t) { return (t - kk) / t * g(t); };
        auto panel = detail::integrate_panel<double>(weighted, kk, kk + 1.0,
                                                     cfg.abs_tol / (4.0 * kk * kk), 32);
        out.evaluations += panel.evaluations;
        quad_err += panel.error;
        out.value += panel.value;
        const double edge = std::abs(g(kk + 1.0));
        out.evaluations += 1;
        const double tail_bound = edge / decay_rate;
        if (k >= 3 && tail_bound < 0.5 * cfg.abs_tol) {
            out.error_estimate = quad_err + tail_bound;
            return out;
        }
    }
}

} // namespace foxeq::quad
