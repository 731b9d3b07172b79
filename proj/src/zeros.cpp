#include "foxeq/zeros.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include "foxeq/detail/wide.hpp"

namespace foxeq::zeros {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFirstOrdinate = 14.134725;

int pair_count(const ZeroTable& table, const ZeroSumConfig& cfg) {
    if (table.size() == 0) throw DomainError("zero sum: empty zero table");
    if (cfg.max_zeros < 1 || cfg.series_max_k < 1)
        throw DomainError("zero sum: config counts must be >= 1");
    return static_cast<int>(std::min<std::size_t>(table.size(),
                                                  static_cast<std::size_t>(cfg.max_zeros)));
}

} // namespace

ZeroTable load_zeros(const std::string& path, const cfun::ZetaConfig& zcfg) {
    std::ifstream in(path);
    if (!in) throw IoError("load_zeros: cannot open '" + path + "'");
    ZeroTable table;
    table.source_path = path;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        const char* text = line.c_str() + begin;
        char* end = nullptr;
        const double value = std::strtod(text, &end);
        if (end == text || value <= 0.0 || !std::isfinite(value))
            throw FormatError("load_zeros: line " + std::to_string(lineno) +
                              ": not a positive ordinate: '" + line + "'");
        while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
        if (*end != '\0')
            throw FormatError("load_zeros: line " + std::to_string(lineno) +
                              ": trailing junk: '" + line + "'");
        if (!table.ordinates.empty() && value <= table.ordinates.back())
            throw FormatError("load_zeros: line " + std::to_string(lineno) +
                              ": ordinates must be strictly ascending");
        table.ordinates.push_back(value);
    }
    if (table.ordinates.empty()) throw FormatError("load_zeros: no ordinates in '" + path + "'");
    if (std::abs(table.ordinates.front() - kFirstOrdinate) > 1e-6)
        throw ValidationError("load_zeros: first ordinate " +
                              std::to_string(table.ordinates.front()) +
                              " is not the 14.134725 anchor");
    table.zeta_prime_values.reserve(table.size());
    for (double g : table.ordinates) {
        const std::complex<double> rho(0.5, g);
        const double mag = std::abs(cfun::zeta(rho, zcfg));
        if (mag > 1e-6)
            throw ValidationError("load_zeros: ordinate " + std::to_string(g) +
                                  " fails the zero check (|zeta| = " + std::to_string(mag) + ")");
        const std::complex<double> zp = cfun::zeta_prime(rho, zcfg);
        if (std::abs(zp) == 0.0)
            throw ValidationError("load_zeros: zeta'(rho) vanished at ordinate " +
                                  std::to_string(g));
        table.zeta_prime_values.push_back(zp);
    }
    return table;
}

double zero_sum_f(double x, const ZeroTable& table, const ZeroSumConfig& cfg) {
    if (x <= 0.0) throw DomainError("zero_sum_f: requires x > 0");
    const int n = pair_count(table, cfg);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> term =
            cfun::power_over_cos_half_pi(x, table.ordinates[static_cast<std::size_t>(k)]) /
            table.zeta_prime_values[static_cast<std::size_t>(k)];
        sum += 2.0 * term.real();
    }
    return 0.5 * kPi * sum;
}

double waldvogel_zero_sum(double t, const ZeroTable& table, const ZeroSumConfig& cfg) {
    if (t <= 0.0) throw DomainError("waldvogel_zero_sum: requires t > 0");
    const int n = pair_count(table, cfg);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> rho(0.5, table.ordinates[static_cast<std::size_t>(k)]);
        const std::complex<double> term =
            cfun::power_over_cos_half_pi(t, table.ordinates[static_cast<std::size_t>(k)]) /
            (rho * table.zeta_prime_values[static_cast<std::size_t>(k)]);
        sum += 2.0 * term.real();
    }
    return sum;
}

double waldvogel_rhs(double t, const ZeroTable& table, const ZeroSumConfig& cfg) {
    if (t <= 1.0)
        throw DomainError("waldvogel_rhs: the odd-zeta series requires t > 1");
    double series = 0.0;
    const double tt = t * t;
    double tpow = 1.0 / t;   // t^{-2n-1} running
    double sign = 1.0;       // (-1)^{n-1}
    for (int k = 1; k <= cfg.series_max_k; ++k) {
        tpow /= tt;
        const double term = sign * tpow / ((2 * k + 1) * detail::zeta_integer(2 * k + 1));
        series += term;
        sign = -sign;
        if (std::abs(term) < 1e-18 * std::abs(series)) break;
    }
    return series / kPi + 0.5 * waldvogel_zero_sum(t, table, cfg);
}

double alternating_zeta_series(double x, const ZeroSumConfig& cfg) {
    if (x <= 1.0) throw DomainError("alternating_zeta_series: requires x > 1");
    if (cfg.series_max_k < 1) throw DomainError("alternating_zeta_series: series_max_k >= 1");
    double sum = 0.0;
    const double xx = x * x;
    double xpow = 1.0 / x;
    double sign = -1.0;      // (-1)^k
    for (int k = 1; k <= cfg.series_max_k; ++k) {
        xpow /= xx;
        const double term = sign * xpow / detail::zeta_integer(2 * k + 1);
        sum += term;
        sign = -sign;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace foxeq::zeros
