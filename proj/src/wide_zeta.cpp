#include "foxeq/detail/wide.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace foxeq::detail {
namespace {

constexpr int kTableSize = 512;

// B_2, B_4, ..., B_24 as exact rationals.
constexpr long long kBernNum[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611, 854513, -236364091};
constexpr long long kBernDen[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330, 138, 2730};
constexpr int kBernCount = 12;

wide powi(wide base, int e) {
    wide r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Euler-Maclaurin with exact Bernoulli corrections; for large m the direct
// sum alone is already exact at this precision.
wide zeta_em(int m) {
    if (m >= 40) {
        wide s = 0;
        for (int n = 16; n >= 1; --n) s += 1 / powi(static_cast<wide>(n), m);
        return s;
    }
    const int N = 256;
    wide s = 0;
    for (int n = N - 1; n >= 1; --n) s += 1 / powi(static_cast<wide>(n), m);
    const wide Nw = static_cast<wide>(N);
    s += 1 / (powi(Nw, m - 1) * (m - 1));
    s += 1 / (2 * powi(Nw, m));
    wide poch = m;                 // m (m+1) ... (m + 2j - 2)
    wide fact = 2;                 // (2j)!
    wide npow = powi(Nw, m + 1);   // N^(m + 2j - 1)
    for (int j = 1; j <= kBernCount; ++j) {
        const wide bern = static_cast<wide>(kBernNum[j - 1]) / static_cast<wide>(kBernDen[j - 1]);
        s += bern / fact * poch / npow;
        poch *= (m + 2 * j - 1);
        poch *= (m + 2 * j);
        fact *= (2 * j + 1);
        fact *= (2 * j + 2);
        npow *= Nw * Nw;
    }
    return s;
}

const std::vector<wide>& table() {
    static std::vector<wide> t;
    static std::once_flag flag;
    std::call_once(flag, [] {
        t.resize(kTableSize);
        t[0] = t[1] = 0; // unused
        for (int m = 2; m < kTableSize; ++m) t[m] = zeta_em(m);
    });
    return t;
}

} // namespace

wide zeta_integer_wide(int m) {
    if (m >= kTableSize) m = kTableSize - 1;
    return table()[m];
}

double zeta_integer(int m) {
    return static_cast<double>(zeta_integer_wide(m));
}

} // namespace foxeq::detail
