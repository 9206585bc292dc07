#pragma once

#include "tfkac/core.hpp"
#include "tfkac/quadrature.hpp"

#include <functional>

namespace tfkac {

/// Discrete norms of one time level (boundary values implicitly zero):
/// l2_h = sqrt(h sum |v_m|^2), h1_semi includes the boundary difference
/// quotients, max_h is the interior maximum modulus.
struct LevelNorms {
    double l2_h = 0.0;
    double h1_semi = 0.0;
    double max_h = 0.0;
};

LevelNorms level_norms(const ComplexVector& v, const SpaceGrid& grid);

/// Space-time composite norms over levels n = 1..N (level 0 excluded):
/// st_0h1 = sqrt(sum tau |v^n|_{h,1}^2), st_0prime_hinf = sum tau ||v^n||_{h,inf}.
struct SpaceTimeNorms {
    double st_0h1 = 0.0;
    double st_0prime_hinf = 0.0;
};

SpaceTimeNorms spacetime_norms(const SolutionHistory& history);

/// Exact H^1 seminorm of the piecewise-linear function with the given
/// interior nodal coefficients (zero at the boundary):
/// sqrt(sum_m |v_m - v_{m-1}|^2 / h).
double fem_h1_seminorm(const ComplexVector& coeffs, const SpaceGrid& grid);

/// |.|_1 seminorm of the difference between a coarse P1 solution and the
/// solution on the half-size mesh, after injecting the coarse function into
/// the fine P1 space. Both vectors are final-time interior coefficients.
double refinement_error(const ComplexVector& coarse, const SpaceGrid& coarse_grid,
                        const ComplexVector& fine, const SpaceGrid& fine_grid);

/// Composite sqrt(sum_n tau |u(.,t_n) - u_h^n|_1^2) where the error gradient
/// is integrated per element against the supplied analytic du/dx.
double fem_true_h1_error(const SolutionHistory& solution,
                         const std::function<Complex(double, double)>& exact_dx,
                         const QuadratureRule& rule);

} // namespace tfkac
