#pragma once

#include "tfkac/core.hpp"

#include <functional>
#include <vector>

namespace tfkac {

enum class RuleKind { jacobi, legendre };

/// Nodes and weights on (-1,1). The Jacobi family carries the singular
/// weight (1-xi)^{-gamma}; Legendre is the unit weight.
struct QuadratureRule {
    RuleKind kind = RuleKind::legendre;
    double gamma = 0.0; // weight exponent for the jacobi family
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// K-point rule exact for polynomials of degree <= 2K-1 against the weight
/// (1-xi)^{-gamma} on (-1,1). Golub-Welsch on the Jacobi recurrence with
/// alpha = -gamma, beta = 0.
QuadratureRule gauss_jacobi(double gamma, int order);

/// K-point Gauss-Legendre rule on (-1,1).
QuadratureRule gauss_legendre(int order);

/// Riemann-Liouville integral of order 1-gamma at time t,
///   (1/Gamma(1-gamma)) int_0^t (t-xi)^{-gamma} v(xi) dxi,
/// mapped onto (-1,1) and evaluated with the matching Gauss-Jacobi rule.
/// Returns 0 at t = 0.
Complex rl_integral(double gamma, const std::function<Complex(double)>& v, double t,
                    const QuadratureRule& rule);

/// Caputo derivative of order gamma via the fractional integral of the
/// caller-supplied analytic derivative: I^{1-gamma} v'.
Complex caputo_of(double gamma, const std::function<Complex(double)>& v_prime, double t,
                  const QuadratureRule& rule);

} // namespace tfkac
