#pragma once

#include "tfkac/coeffs.hpp"
#include "tfkac/core.hpp"
#include "tfkac/history.hpp"

#include <functional>
#include <vector>

namespace tfkac {
namespace oracle {

/// Brute-force reference implementations, deliberately simple and slow.
/// They live in the shipped library so reported reference values can be
/// reproduced via the `verify` CLI subcommand. They never call the fast
/// paths they validate.

/// Same contract as substantial_history_sum, but an explicit double loop
/// with compensated summation and direct exponentials for every weight.
ComplexVector dense_history_oracle(const CoefficientTable& coeffs,
                                   const HistoryWeights& weights,
                                   const SolutionHistory& history, int n);

/// Fractional integral of order 1-gamma at t by adaptive Simpson refinement
/// after the substitution u = (t-xi)^{1-gamma} that removes the endpoint
/// singularity.
Complex adaptive_rl_oracle(double gamma, const std::function<Complex(double)>& v, double t,
                           double tol);

/// Partial-pivoted Gaussian elimination on a dense complex matrix
/// (size <= 512).
ComplexVector dense_solve_oracle(std::vector<ComplexVector> matrix, ComplexVector rhs);

} // namespace oracle
} // namespace tfkac
