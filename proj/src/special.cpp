#include "tfkac/special.hpp"

#include <cmath>

namespace tfkac {

namespace {

// Below this modulus the power series loses at most ~7 digits to
// cancellation on the imaginary axis; the continued fraction takes over
// beyond it.
constexpr double kSeriesRadius = 16.0;

Complex series(double s, Complex z) {
    // e^{-z} sum_k z^k / (s (s+1) ... (s+k))
    Complex term = 1.0 / s;
    Complex acc = term;
    for (int k = 1; k <= 600; ++k) {
        term *= z / (s + k);
        acc += term;
        if (std::abs(term) <= 1e-18 * std::abs(acc)) break;
    }
    return std::exp(-z) * acc;
}

Complex upper_cf(double s, Complex z) {
    // Lentz evaluation of the continued fraction for Gamma(s,z) e^{z} z^{-s}:
    //   1 / (z+1-s - 1(1-s)/(z+3-s - 2(2-s)/(z+5-s - ...)))
    constexpr double tiny = 1e-300;
    Complex b = z + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = (b == Complex(0.0)) ? Complex(1.0 / tiny) : 1.0 / b;
    Complex f = d;
    for (int i = 1; i <= 20000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (d == Complex(0.0)) d = tiny;
        c = b + an / c;
        if (c == Complex(0.0)) c = tiny;
        d = 1.0 / d;
        const Complex delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return f;
}

} // namespace

Complex lower_incomplete_gamma_scaled(double s, Complex z) {
    if (!(s > 0.0)) throw BadConfig("incomplete gamma requires s > 0");
    if (z == Complex(0.0)) return Complex(1.0 / s, 0.0);
    if (std::abs(z) < kSeriesRadius) return series(s, z);
    // gamma(s,z) z^{-s} = Gamma(s) z^{-s} - e^{-z} * CF(s,z)
    const Complex zs = std::exp(-s * std::log(z)); // principal branch, Re(z) >= 0
    return std::tgamma(s) * zs - std::exp(-z) * upper_cf(s, z);
}

} // namespace tfkac
