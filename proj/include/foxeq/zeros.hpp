#pragma once

#include <complex>
#include <string>
#include <vector>

#include "foxeq/complexfun.hpp"

namespace foxeq::zeros {

/// Ascending ordinates g_k of the nontrivial zeros rho_k = 1/2 + i g_k, with
/// zeta'(rho_k) cached at load time. Immutable after construction.
struct ZeroTable {
    std::vector<double> ordinates;
    std::vector<std::complex<double>> zeta_prime_values;
    std::string source_path;

    std::size_t size() const { return ordinates.size(); }
};

struct ZeroSumConfig {
    int max_zeros = 30;
    int series_max_k = 60;
};

/// Read an ordinates file (one positive decimal per line, '#' comments,
/// strictly ascending). Every ordinate is certified against
/// |zeta(1/2 + i g)| < 1e-6 and the first against the 14.134725 anchor;
/// zeta'(rho) is evaluated and cached for each zero.
ZeroTable load_zeros(const std::string& path, const cfun::ZetaConfig& zcfg = {});

/// f(x) = (pi/2) sum_rho x^{-rho} / (cos(pi rho/2) zeta'(rho)), zeros paired
/// with their conjugates so each pair contributes 2 Re(term).
double zero_sum_f(double x, const ZeroTable& table, const ZeroSumConfig& cfg = {});

/// The rho-part of the expansion below: sum_rho t^{-rho} / (rho cos(pi rho/2) zeta'(rho)).
double waldvogel_zero_sum(double t, const ZeroTable& table, const ZeroSumConfig& cfg = {});

/// (1/pi) sum_{n>=1} (-1)^{n-1} t^{-2n-1} / ((2n+1) zeta(2n+1))
///   + (1/2) sum_rho t^{-rho} / (rho cos(pi rho/2) zeta'(rho)),  valid t > 1.
double waldvogel_rhs(double t, const ZeroTable& table, const ZeroSumConfig& cfg = {});

/// sum_{k>=1} (-1)^k x^{-2k-1} / zeta(2k+1), valid x > 1 (the closed form of
/// the sine transform of the Mobius-exponential solution).
double alternating_zeta_series(double x, const ZeroSumConfig& cfg = {});

} // namespace foxeq::zeros
