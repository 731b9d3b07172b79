#include "foxeq/fox.hpp"

#include <cmath>
#include <string>

namespace foxeq::fox {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularThreshold = 1e-9;

double denominator(double a) {
    return kPi * kPi - a * kPi / 2.0;
}

} // namespace

std::complex<double> kernel_mellin(Kernel k, std::complex<double> s) {
    const std::complex<double> g = cfun::gamma(s);
    const std::complex<double> half = 0.5 * kPi * s;
    return k == Kernel::Sine ? g * std::sin(half) : g * std::cos(half);
}

double fox_residual(const quad::RealFn& delta, const quad::RealFn& f, const FoxEquation& eq,
                    double x, const quad::QuadratureConfig& cfg) {
    if (x <= 0.0) throw DomainError("fox_residual: requires x > 0");
    if (eq.argument_scale <= 0.0) throw DomainError("fox_residual: argument_scale must be > 0");
    auto scaled = [&delta, &eq](double t) { return delta(eq.argument_scale * t); };
    const auto transform = eq.kernel == Kernel::Sine
                               ? quad::fourier_sine_transform(scaled, x, cfg)
                               : quad::fourier_cosine_transform(scaled, x, cfg);
    return delta(x) - f(x) - eq.amplitude * transform.value;
}

double modified_fox_solution(const quad::RealFn& f, double a, double x,
                             const quad::QuadratureConfig& cfg) {
    if (x <= 0.0) throw DomainError("modified_fox_solution: requires x > 0");
    if (a <= 0.0) throw DomainError("modified_fox_solution: requires a > 0");
    const double d = denominator(a);
    if (std::abs(d) < kSingularThreshold)
        throw SingularityError("modified_fox_solution: singular configuration a = 2*pi "
                               "(a = " + std::to_string(a) + ")");
    const auto transform = quad::fourier_sine_transform(f, x, cfg);
    return -kPi * f(x / a) / d - a / d * transform.value;
}

double modified_fox_solution(const FoxProblem& problem, double x,
                             const quad::QuadratureConfig& cfg) {
    if (problem.kernel != Kernel::Sine)
        throw DomainError("modified_fox_solution: closed form exists for the sine kernel only");
    return modified_fox_solution(problem.inhomogeneity, problem.scale_a, x, cfg);
}

double modified_fox_residual(const quad::RealFn& delta, const quad::RealFn& f, double a,
                             double x, const quad::QuadratureConfig& cfg) {
    if (x <= 0.0) throw DomainError("modified_fox_residual: requires x > 0");
    const auto transform = quad::fourier_sine_transform(delta, x, cfg);
    return kPi * delta(a * x) + f(x) - transform.value;
}

quad::IntegralResult fox_general_solution(const MellinPair& fpair, const MellinPair& kpair,
                                          const quad::ContourSpec& spec, double x,
                                          const quad::QuadratureConfig& cfg) {
    const double c = spec.abscissa_c;
    auto inside = [](const MellinPair& p, double v) {
        return v > p.strip_lo && v < p.strip_hi;
    };
    if (!inside(fpair, c) || !inside(kpair, c) || !inside(fpair, 1.0 - c) || !inside(kpair, 1.0 - c))
        throw DomainError("fox_general_solution: abscissa or its reflection outside a strip");
    // The sine/cosine product kbar(s) kbar(1-s) is constant on the line; a few
    // samples suffice to detect the degenerate configuration.
    for (double tau : {0.0, 0.5 * spec.height_T, spec.height_T}) {
        const std::complex<double> s(c, tau);
        const std::complex<double> d = 1.0 - kpair.fbar(s) * kpair.fbar(1.0 - s);
        if (std::abs(d) < kSingularThreshold)
            throw SingularityError("fox_general_solution: 1 - kbar(s) kbar(1-s) vanishes on the "
                                   "line (the a = 2*pi degeneracy)");
    }
    auto ratio = [&fpair, &kpair](std::complex<double> s) {
        const std::complex<double> num = fpair.fbar(s) + kpair.fbar(s) * fpair.fbar(1.0 - s);
        const std::complex<double> den = 1.0 - kpair.fbar(s) * kpair.fbar(1.0 - s);
        return num / den;
    };
    return quad::inverse_mellin_line(ratio, spec, x, cfg);
}

double proposition_transform_check(const quad::ComplexFn& hbar, const quad::ComplexFn& kbar,
                                   std::complex<double> s, const cfun::ZetaConfig& zcfg) {
    if (std::abs(s) < 1e-8 || std::abs(s - 1.0) < 1e-8)
        throw DomainError("proposition_transform_check: s too close to 0 or 1");
    const std::complex<double> lhs = hbar(s) * cfun::zeta(s, zcfg);
    const std::complex<double> rhs = std::exp((s - 1.0) * std::log(2.0 * kPi)) * kbar(s) *
                                     cfun::zeta(1.0 - s, zcfg) * hbar(1.0 - s);
    return std::abs(lhs - rhs) / std::abs(lhs);
}

} // namespace foxeq::fox
