#pragma once

#include "tfkac/errors.hpp"

#include <vector>

namespace tfkac {

/// Power-series coefficients g_k of (1-z)^gamma, k = 0..n, generated by the
/// multiplicative recurrence g_k = (1 - (gamma+1)/k) g_{k-1}, g_0 = 1.
std::vector<double> grunwald(double gamma, int n);

/// Tempered coefficients g_k^(gamma,lambda) = e^{-k lambda tau} g_k, the
/// power-series coefficients of (1 - z e^{-lambda tau})^gamma.
std::vector<double> tempered_grunwald(double gamma, double lambda, double tau, int n);

/// Time-stepping coefficients: d_0 = 1 - e^{-gamma lambda tau} (lambda tau)^gamma
/// (the zeroth tempered coefficient with the lambda^gamma reaction term
/// absorbed), d_k = g_k^(gamma,lambda) for k >= 1.
std::vector<double> d_coeffs(double gamma, double lambda, double tau, int n);

/// Partial sums Q_k = sum_{j<=k} g_j of the plain coefficients; equivalently
/// the power-series coefficients of (1-z)^(gamma-1). All positive.
std::vector<double> q_partial_sums(double gamma, int n);

/// Precomputed coefficient sequences shared by both schemes for a fixed
/// (gamma, lambda, tau, N). Immutable after construction.
struct CoefficientTable {
    double gamma = 0.0;
    double lambda = 0.0;
    double tau = 0.0;
    std::vector<double> g_plain;
    std::vector<double> g_tempered;
    std::vector<double> d;
    std::vector<double> q_partial;

    static CoefficientTable build(double gamma, double lambda, double tau, int n);

    int max_index() const { return static_cast<int>(d.size()) - 1; }
};

} // namespace tfkac
