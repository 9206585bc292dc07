#pragma once

#include "tfkac/core.hpp"

#include <functional>

namespace tfkac {

/// Fourier-series Euler-summation inversion of a Laplace transform along the
/// contour p_j = A~/(2A) + j pi i / A.
struct InversionConfig {
    double a_tilde = 18.4; // discretization parameter; e^{-A~} sets the bias
    int k1 = 25;           // base partial-sum index
    int k2 = 15;           // Euler averaging depth (binomial weights, <= 40)
    std::function<Complex(Complex)> evaluator;
};

/// n-th partial sum
///   s_n(A) = e^{A~/2}/(2A) Re G(A~/2A)
///          + e^{A~/2}/A sum_{j=1}^{n} (-1)^j Re G(A~/2A + j pi i/A).
double partial_sum(double A, int n, const InversionConfig& cfg);

/// Binomially averaged value sum_{k=0}^{K2} C(K2,k) 2^{-K2} s_{K1+k}(A).
/// The evaluator is called exactly K1+K2+1 times, j ascending.
double euler_invert(double A, const InversionConfig& cfg);

} // namespace tfkac
