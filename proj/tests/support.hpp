#pragma once

#include "tfkac/core.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace tfkac::test {

// test-only adaptive Simpson on a finite interval (independent of the
// library quadrature paths it helps validate)
inline Complex ref_integrate(const std::function<Complex(double)>& f, double a, double b,
                             double tol = 1e-13, int depth = 40) {
    const auto simpson = [&](double lo, double hi, Complex flo, Complex fmid, Complex fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<Complex(double, double, Complex, Complex, Complex, Complex, double, int)>
        step = [&](double lo, double hi, Complex flo, Complex fmid, Complex fhi,
                   Complex whole, double eps, int d) -> Complex {
        const double mid = 0.5 * (lo + hi);
        const Complex fl = f(0.5 * (lo + mid));
        const Complex fr = f(0.5 * (mid + hi));
        const Complex left = simpson(lo, mid, flo, fl, fmid);
        const Complex right = simpson(mid, hi, fmid, fr, fhi);
        if (std::abs(left + right - whole) <= 15.0 * eps || d <= 0)
            return left + right + (left + right - whole) / 15.0;
        return step(lo, mid, flo, fl, fmid, left, eps / 2.0, d - 1)
               + step(mid, hi, fmid, fr, fhi, right, eps / 2.0, d - 1);
    };
    const Complex fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    return step(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(987654321u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex(double scale = 1.0) {
    return Complex(uniform(-scale, scale), uniform(-scale, scale));
}

} // namespace tfkac::test
