#pragma once

#include "tfkac/core.hpp"
#include "tfkac/tridiag.hpp"

#include <functional>

namespace tfkac {

enum class Variant { zero_ic, general_ic };

/// Source callback f(x, t) for a fixed model (p is captured by the problem).
using SourceFn = std::function<Complex(double x, double t)>;

/// System matrix (d_0/tau^gamma) I - K_gamma H with H = (1/h^2) tridiag(1,-2,1),
/// real, strictly diagonally dominant, constant across time steps.
TridiagonalOperator assemble_fdm_system(const ModelParams& params, const SpaceGrid& grid,
                                        double tau, double d0);

/// Fully discrete finite-difference march. For n = 1..N solves
///   (d_0/tau^gamma I - K_gamma H) G^n
///       = F^n - (1/tau^gamma) sum_{k=1}^{n} d_k w_{.,k} (.) G^{n-k}
///         [+ initial-data correction for Variant::general_ic].
/// Variant::zero_ic requires a zero initial vector (lift the data first).
SolutionHistory march_fdm(const ModelParams& params, const SpaceGrid& sgrid,
                          const TimeGrid& tgrid, const SourceFn& source,
                          const ComplexVector& ic, Variant variant);

} // namespace tfkac
