#pragma once

#include "tfkac/core.hpp"
#include "tfkac/fdm.hpp"
#include "tfkac/quadrature.hpp"

#include <functional>

namespace tfkac {

/// A solvable problem instance: source term, data, and (when known) the
/// exact solution with its spatial derivative. A lifted problem has zero
/// initial and boundary data and carries the additive term that maps the
/// homogeneous solution back to the original unknown.
struct ManufacturedProblem {
    std::function<Complex(double, double)> exact;     // (x,t); empty if unknown
    std::function<Complex(double, double)> exact_dx;  // d/dx of exact; empty if unknown
    SourceFn source;
    std::function<Complex(double)> boundary_left = [](double) { return Complex(0.0); };
    std::function<Complex(double)> boundary_right = [](double) { return Complex(0.0); };
    std::function<Complex(double)> initial = [](double) { return Complex(0.0); };
    bool lifted = false;
    std::function<Complex(double, double)> lift_term; // original = solution + lift_term

    /// Initial data sampled at the interior nodes.
    ComplexVector initial_on(const SpaceGrid& grid) const;

    /// Reconstruct the original unknown at (x,t) from a homogeneous-solution
    /// value (identity when not lifted).
    Complex reconstruct(Complex w, double x, double t) const;
};

/// Change of unknown that zeroes the initial and boundary data: the new
/// problem keeps the transformed exact solution (when known) and the lift
/// term for reconstruction. The caller supplies the transformed source;
/// the shipped example problems carry theirs in closed form.
ManufacturedProblem lift_boundary(const ManufacturedProblem& problem,
                                  const ModelParams& params);

/// Exact solution (t^2+1) e^{-(lambda+p x)t} (sin x - x sin 1) on (0,1) with
/// U(x) = x; direct form with nonzero initial data (for the general-IC
/// scheme).
ManufacturedProblem example1(const ModelParams& params);

/// Same problem after lifting the initial data: homogeneous unknown
/// t^2 e^{-(lambda+p x)t} (sin x - x sin 1) with closed-form source.
ManufacturedProblem example1_lifted(const ModelParams& params);

/// Genuine model problem on (0,1) with U(x) = x, zero initial data and
/// boundary values psi_l = t, psi_r = e^{-t} - 1, already lifted. The source
/// combines closed-form terms with fractional integrals evaluated by the
/// supplied Gauss-Jacobi rule (built with the same gamma). No exact solution.
ManufacturedProblem example2(const ModelParams& params, const QuadratureRule& rule);

/// Exact Laplace-domain solution t^2 e^{-lambda t} (x - x^3) / (p + 2) on
/// (0,1) with U(x) = x; zero initial and boundary data. The source is in
/// closed form through the scaled lower incomplete gamma function, valid on
/// the whole inversion contour Re(p) > 0.
ManufacturedProblem example3(const ModelParams& params);

} // namespace tfkac
