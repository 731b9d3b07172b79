#pragma once

#include <complex>

#include "foxeq/errors.hpp"

namespace foxeq::cfun {

using Cplx = std::complex<double>;

/// Tuning knobs for the Euler-Maclaurin zeta evaluation. The direct-sum
/// length is auto-scaled as N = max(euler_maclaurin_cutoff, ceil(1.3 |Im s|)),
/// which keeps the tail corrections convergent up to the heights used by the
/// contour checks.
struct ZetaConfig {
    int euler_maclaurin_cutoff = 64;
    int bernoulli_terms = 12;   // at most 12 exact-rational corrections
};

/// Gamma(s) by a fixed-coefficient Lanczos approximation (reflection for
/// Re(s) < 1/2). Throws PoleError at nonpositive integers.
Cplx gamma(Cplx s);

/// log Gamma(s) in the right half-plane Re(s) > 0, smooth in s (no branch
/// cuts inside the region); used by the critical-line sign-change oracle.
Cplx log_gamma(Cplx s);

/// Riemann zeta by Euler-Maclaurin summation. Throws PoleError at s = 1.
Cplx zeta(Cplx s, const ZetaConfig& cfg = {});

/// zeta'(s), the term-by-term derivative of the same Euler-Maclaurin form.
Cplx zeta_prime(Cplx s, const ZetaConfig& cfg = {});

/// Relative residual of zeta(s) = 2 (2 pi)^(s-1) Gamma(1-s) sin(pi s / 2) zeta(1-s).
/// Throws DomainError near the pole/indeterminate configurations (s near 0 or
/// 1, and real s at an integer >= 2 or a trivial zero).
double functional_equation_residual(Cplx s, const ZetaConfig& cfg = {});

/// x^(-rho) / cos(pi rho / 2) for rho = 1/2 + i g, evaluated as a combined
/// exponential so neither factor overflows for large ordinates.
Cplx power_over_cos_half_pi(double x, double ordinate);

} // namespace foxeq::cfun
