#pragma once

#include <complex>
#include <functional>

#include "foxeq/errors.hpp"

namespace foxeq::quad {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

/// Tolerances and caps shared by all engines. 15-point Gauss-Legendre panels
/// with recursive bisection throughout.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;       // panel budget for the open-ended engines
    int oscillatory_max_segments = 400;
    int acceleration_order = 10;       // epsilon-algorithm depth
};

/// Vertical line Re(s) = abscissa_c truncated to Im(s) in [-height_T, height_T],
/// split into panel_count starting panels per half-line.
struct ContourSpec {
    double abscissa_c = 0.5;
    double height_T = 60.0;
    int panel_count = 64;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct ComplexIntegralResult {
    std::complex<double> value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive integral of f over the finite interval [a, b].
IntegralResult integrate_adaptive(const RealFn& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

/// int_0^inf f(t) dt for absolutely integrable f with at worst an integrable
/// algebraic singularity at 0. Exponential map t = e^u, unit panels extended
/// in both directions until they stop contributing.
IntegralResult integrate_semi_infinite(const RealFn& f, const QuadratureConfig& cfg = {});

/// int_0^inf sin(x t) f(t) dt by splitting at the sine zeros t_k = k pi / x
/// and accelerating the alternating segment series (Wynn epsilon).
IntegralResult fourier_sine_transform(const RealFn& f, double x,
                                      const QuadratureConfig& cfg = {});

/// Cosine companion of the engine above (no identity in the suite uses it).
IntegralResult fourier_cosine_transform(const RealFn& f, double x,
                                        const QuadratureConfig& cfg = {});

/// int_0^inf t^{s-1} f(t) dt, split at t = 1 with exponential maps on each
/// half. Re(s) must lie inside f's strip of Mellin convergence; panel growth
/// is reported as a DomainError.
ComplexIntegralResult mellin_transform_numeric(const RealFn& f, std::complex<double> s,
                                               const QuadratureConfig& cfg = {});

/// Abel-regularized Mellin transform of sin(x t) at real s in (-1, 1):
/// the eps -> 0 limit of int t^{s-1} e^{-eps t} sin(x t) dt, Richardson
/// extrapolation over a halving eps ladder.
IntegralResult mellin_sine_regularized(double s, double x = 1.0,
                                       const QuadratureConfig& cfg = {});

/// (1/2 pi i) int_{c-iT}^{c+iT} F(s) x^{-s} ds. Returns the real part; the
/// imaginary part (which must vanish for conjugate-symmetric F) is folded
/// into error_estimate and throws SymmetryError when it is far above the
/// quadrature noise.
IntegralResult inverse_mellin_line(const ComplexFn& F, const ContourSpec& spec, double x,
                                   const QuadratureConfig& cfg = {});

/// int_0^inf ({t}/t) g(t) dt over exact unit panels, for g with a declared
/// exponential decay rate (|g(t)| <= C e^{-decay_rate t}); the tail bound
/// from that rate terminates the panel sweep.
IntegralResult fractional_weighted_integral(const RealFn& g, const QuadratureConfig& cfg = {},
                                            double decay_rate = 1.0);

} // namespace foxeq::quad
