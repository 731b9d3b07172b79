#include "foxeq/complexfun.hpp"

#include <algorithm>
#include <cmath>

namespace foxeq::cfun {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kSqrt2Pi = 2.5066282746310005024;

// Lanczos, g = 7, 9 terms (~1e-13 relative in the right half-plane).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// B_2 .. B_24 as exact rationals.
constexpr double kBern[12] = {
    1.0 / 6.0,          -1.0 / 30.0,         1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,     7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,   854513.0 / 138.0,    -236364091.0 / 2730.0,
};

bool at_nonpositive_integer(Cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

Cplx lanczos_series(Cplx z) {
    Cplx a(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i - 1));
    return a;
}

struct EmSetup {
    int n;
    int terms;
};

EmSetup em_setup(Cplx s, const ZetaConfig& cfg) {
    if (cfg.euler_maclaurin_cutoff < 10 || cfg.bernoulli_terms < 2)
        throw DomainError("zeta: config requires cutoff >= 10 and bernoulli_terms >= 2");
    int n = std::max(cfg.euler_maclaurin_cutoff,
                     static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
    return {n, std::min(cfg.bernoulli_terms, 12)};
}

} // namespace

Cplx gamma(Cplx s) {
    if (at_nonpositive_integer(s))
        throw PoleError("gamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // Reflection; sin(pi s) is safe for the |Im s| range this library uses.
        return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
    }
    const Cplx z = s - 1.0;
    const Cplx t = z + kLanczosG + 0.5;
    return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_series(z);
}

Cplx log_gamma(Cplx s) {
    if (s.real() <= 0.0)
        throw DomainError("log_gamma: defined here only for Re(s) > 0");
    const Cplx z = s - 1.0;
    const Cplx t = z + kLanczosG + 0.5;
    return 0.5 * kLog2Pi + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

Cplx zeta(Cplx s, const ZetaConfig& cfg) {
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta: pole at s = 1");
    const auto [n, terms] = em_setup(s, cfg);
    const double log_n = std::log(static_cast<double>(n));
    Cplx acc(0.0, 0.0);
    for (int k = n - 1; k >= 2; --k) acc += std::exp(-s * std::log(static_cast<double>(k)));
    acc += 1.0;
    const Cplx n_pow_1ms = std::exp((1.0 - s) * log_n);
    const Cplx n_pow_ms = std::exp(-s * log_n);
    acc += n_pow_1ms / (s - 1.0);
    acc += 0.5 * n_pow_ms;
    Cplx poch = s;                       // s (s+1) ... (s + 2j - 2)
    Cplx npow = n_pow_ms / static_cast<double>(n);   // N^(1 - s - 2j)
    double fact = 2.0;                   // (2j)!
    for (int j = 1; j <= terms; ++j) {
        acc += kBern[j - 1] / fact * poch * npow;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        fact *= (2 * j + 1) * (2 * j + 2);
        npow /= static_cast<double>(n) * static_cast<double>(n);
    }
    return acc;
}

Cplx zeta_prime(Cplx s, const ZetaConfig& cfg) {
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta_prime: pole at s = 1");
    const auto [n, terms] = em_setup(s, cfg);
    const double log_n = std::log(static_cast<double>(n));
    Cplx acc(0.0, 0.0);
    for (int k = n - 1; k >= 2; --k) {
        const double lk = std::log(static_cast<double>(k));
        acc -= lk * std::exp(-s * lk);
    }
    const Cplx n_pow_1ms = std::exp((1.0 - s) * log_n);
    const Cplx n_pow_ms = std::exp(-s * log_n);
    acc += -log_n * n_pow_1ms / (s - 1.0) - n_pow_1ms / ((s - 1.0) * (s - 1.0));
    acc += -0.5 * log_n * n_pow_ms;
    Cplx poch = s;
    Cplx harm = 1.0 / s;                 // d/ds log poch
    Cplx npow = n_pow_ms / static_cast<double>(n);
    double fact = 2.0;
    for (int j = 1; j <= terms; ++j) {
        acc += kBern[j - 1] / fact * poch * npow * (harm - log_n);
        const Cplx f1 = s + static_cast<double>(2 * j - 1);
        const Cplx f2 = s + static_cast<double>(2 * j);
        poch *= f1 * f2;
        harm += 1.0 / f1 + 1.0 / f2;
        fact *= (2 * j + 1) * (2 * j + 2);
        npow /= static_cast<double>(n) * static_cast<double>(n);
    }
    return acc;
}

double functional_equation_residual(Cplx s, const ZetaConfig& cfg) {
    if (std::abs(s) < 1e-8 || std::abs(s - 1.0) < 1e-8)
        throw DomainError("functional_equation_residual: s too close to 0 or 1");
    if (std::abs(s.imag()) < 1e-6) {
        const double r = s.real();
        const double nearest = std::round(r);
        if (std::abs(r - nearest) < 1e-6 && nearest >= 2.0)
            throw DomainError("functional_equation_residual: Gamma(1-s) pole");
        if (std::abs(r - nearest) < 1e-6 && nearest <= -2.0 && std::fmod(nearest, 2.0) == 0.0)
            throw DomainError("functional_equation_residual: trivial zero (0/0)");
    }
    const Cplx lhs = zeta(s, cfg);
    const Cplx rhs = 2.0 * std::exp((s - 1.0) * kLog2Pi) * gamma(1.0 - s) *
                     std::sin(0.5 * kPi * s) * zeta(1.0 - s, cfg);
    return std::abs(lhs - rhs) / std::abs(lhs);
}

Cplx power_over_cos_half_pi(double x, double ordinate) {
    if (x <= 0.0) throw DomainError("power_over_cos_half_pi: requires x > 0");
    // cos(pi rho / 2) = (sqrt2 / 4) [e^u (1 - i) + e^{-u} (1 + i)], u = pi g / 2.
    const double u = 0.5 * kPi * ordinate;
    const double l = std::log(x);
    const double damp = std::exp(-u);
    const double damp2 = damp * damp;
    const Cplx numer = 2.0 * std::sqrt(2.0) * std::exp(-0.5 * l) * damp *
                       Cplx(std::cos(ordinate * l), -std::sin(ordinate * l));
    const Cplx denom(1.0 + damp2, -(1.0 - damp2));
    return numer / denom;
}

} // namespace foxeq::cfun
