#pragma once

#include "tfkac/core.hpp"
#include "tfkac/fdm.hpp"
#include "tfkac/quadrature.hpp"
#include "tfkac/tridiag.hpp"

namespace tfkac {

/// Nodal basis coefficients per time level; boundary coefficients are
/// identically zero (the trial space sits in H^1_0).
using FemSolution = SolutionHistory;

/// P1 mass and stiffness bands on the uniform mesh plus the factorized
/// time-stepping system (d_0/tau^gamma) M + K_gamma S.
struct FemMatrices {
    double h = 0.0;
    std::vector<double> mass_diag, mass_off;
    std::vector<double> stiff_diag, stiff_off;
    TridiagonalOperator system;
};

FemMatrices assemble_fem(const SpaceGrid& grid, const ModelParams& params, double tau,
                         double d0);

/// Inner products (e^{-p U(x) k tau} v_h, phi_m) for all interior hat
/// functions, with v_h the P1 function given by `coeffs`, integrated per
/// element by the supplied Gauss-Legendre rule.
ComplexVector weighted_mass_apply(int k, const ComplexVector& coeffs,
                                  const ModelParams& params, const SpaceGrid& grid,
                                  double tau, const QuadratureRule& rule);

/// Load vector (f, phi_m) for a source already bound at one time level.
ComplexVector fem_load(const std::function<Complex(double)>& fn, const SpaceGrid& grid,
                       const QuadratureRule& rule);

/// How the nonzero initial data enters the general-IC correction term.
enum class FemIcProjection { interpolant, l2_projection };

struct FemOptions {
    int quad_order = 4;
    FemIcProjection ic_projection = FemIcProjection::interpolant;
};

/// Fully discrete P1 finite-element march. Variant::zero_ic starts from
/// G_h^0 = 0; Variant::general_ic starts from the supplied nodal data and
/// adds the initial-data correction to every load vector.
FemSolution march_fem(const ModelParams& params, const SpaceGrid& sgrid,
                      const TimeGrid& tgrid, const SourceFn& source,
                      const ComplexVector& ic, Variant variant,
                      const FemOptions& options = {});

} // namespace tfkac
