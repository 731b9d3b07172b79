#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

// Shared 15-point Gauss-Legendre panel rule with recursive bisection.
// Kept header-only and dependency-free so both the special-function layer and
// the quadrature engines can use it without a layering cycle.

namespace foxeq::detail {

struct GlNode {
    double x;
    double w;
};

inline constexpr std::array<GlNode, 15> kGl15 = {{
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
}};

template <typename T, typename F>
T gl15_panel(F&& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T acc{};
    for (const auto& n : kGl15) {
        acc += T(f(c + h * n.x)) * n.w;
    }
    evals += 15;
    return acc * h;
}

template <typename T>
struct AdaptiveOutcome {
    T value{};
    double error = 0.0;   // accumulated panel error estimate
    bool converged = true;
    long evaluations = 0;
};

// Recursive bisection: a panel is accepted when GL15 over the whole interval
// agrees with the sum over its halves. The children's sum is kept as the value.
template <typename T, typename F>
void adaptive_recurse(F&& f, double a, double b, T whole, double tol, int depth,
                      int max_depth, AdaptiveOutcome<T>& out) {
    const double m = 0.5 * (a + b);
    const T left = gl15_panel<T>(f, a, m, out.evaluations);
    const T right = gl15_panel<T>(f, m, b, out.evaluations);
    const double err = std::abs(whole - (left + right));
    if (err <= tol || depth >= max_depth) {
        out.value += left + right;
        out.error += err;
        if (depth >= max_depth && err > tol) out.converged = false;
        return;
    }
    adaptive_recurse(f, a, m, left, 0.5 * tol, depth + 1, max_depth, out);
    adaptive_recurse(f, m, b, right, 0.5 * tol, depth + 1, max_depth, out);
}

// Integrate f over [a, b] to absolute tolerance tol. T is double or
// std::complex<double>.
template <typename T, typename F>
AdaptiveOutcome<T> integrate_panel(F&& f, double a, double b, double tol,
                                   int max_depth = 30) {
    AdaptiveOutcome<T> out;
    if (a == b) return out;
    const T whole = gl15_panel<T>(f, a, b, out.evaluations);
    adaptive_recurse(f, a, b, whole, tol, 0, max_depth, out);
    return out;
}

} // namespace foxeq::detail
