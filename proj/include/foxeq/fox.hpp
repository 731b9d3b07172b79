#pragma once

#include <complex>

#include "foxeq/complexfun.hpp"
#include "foxeq/quadrature.hpp"

namespace foxeq::fox {

enum class Kernel { Sine, Cosine };

/// Mellin transform of the kernel on its strip:
/// sine -> Gamma(s) sin(pi s / 2), cosine -> Gamma(s) cos(pi s / 2).
std::complex<double> kernel_mellin(Kernel k, std::complex<double> s);

/// A problem instance of the scaled equation
///   pi Delta(a x) = -f(x) + int_0^inf k(x t) Delta(t) dt.
struct FoxProblem {
    quad::RealFn inhomogeneity;
    Kernel kernel = Kernel::Sine;
    double scale_a = 1.0;
};

/// Mellin transform of an ingredient together with its open strip of validity.
struct MellinPair {
    quad::ComplexFn fbar;
    double strip_lo = 0.0;
    double strip_hi = 1.0;
};

/// The equation family Delta(x) = f(x) + amplitude int_0^inf k(x t) Delta(scale t) dt.
/// amplitude/scale cover the 2-pi-dilated variants without new operators.
struct FoxEquation {
    Kernel kernel = Kernel::Sine;
    double amplitude = 1.0;
    double argument_scale = 1.0;
};

/// Signed residual Delta(x) - f(x) - amplitude int k(x t) Delta(scale t) dt.
double fox_residual(const quad::RealFn& delta, const quad::RealFn& f, const FoxEquation& eq,
                    double x, const quad::QuadratureConfig& cfg = {});

/// Closed-form solution of the scaled equation away from a = 2 pi:
///   Delta(x) = -pi f(x/a) / (pi^2 - a pi/2) - a/(pi^2 - a pi/2) int sin(x t) f(t) dt.
/// Throws SingularityError when |pi^2 - a pi/2| < 1e-9.
double modified_fox_solution(const quad::RealFn& f, double a, double x,
                             const quad::QuadratureConfig& cfg = {});
double modified_fox_solution(const FoxProblem& problem, double x,
                             const quad::QuadratureConfig& cfg = {});

/// Signed residual pi Delta(a x) + f(x) - int_0^inf sin(x t) Delta(t) dt.
double modified_fox_residual(const quad::RealFn& delta, const quad::RealFn& f, double a,
                             double x, const quad::QuadratureConfig& cfg = {});

/// General Mellin-domain solution
///   (1/2 pi i) int [fbar(s) + kbar(s) fbar(1-s)] / [1 - kbar(s) kbar(1-s)] x^{-s} ds
/// on the line Re(s) = spec.abscissa_c, which must lie (with its reflection
/// 1-c) inside both strips. A vanishing denominator on the line is the a=2pi
/// degeneracy and throws SingularityError.
quad::IntegralResult fox_general_solution(const MellinPair& fpair, const MellinPair& kpair,
                                          const quad::ContourSpec& spec, double x,
                                          const quad::QuadratureConfig& cfg = {});

/// Relative residual of hbar(s) zeta(s) = (2 pi)^{s-1} kbar(s) zeta(1-s) hbar(1-s).
double proposition_transform_check(const quad::ComplexFn& hbar, const quad::ComplexFn& kbar,
                                   std::complex<double> s, const cfun::ZetaConfig& zcfg = {});

} // namespace foxeq::fox
