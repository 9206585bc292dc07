#include "tfkac/fem.hpp"

#include "tfkac/coeffs.hpp"
#include "tfkac/history.hpp"

#include <cmath>

namespace tfkac {

namespace {

// Quadrature points of every element in one flat array, plus the P1 shape
// values at the reference points.
struct ElementQuad {
    ElementQuad(const SpaceGrid& grid, const QuadratureRule& rule)
        : m_count(grid.m_count()), order(rule.order) {
        if (rule.kind != RuleKind::legendre)
            throw RuleMismatch("element integration expects a legendre rule");
        const double h = grid.h();
        shape_right.resize(order);
        scaled_w.resize(order);
        for (int q = 0; q < order; ++q) {
            shape_right[q] = (rule.nodes[q] + 1.0) / 2.0;
            scaled_w[q] = rule.weights[q] * h / 2.0;
        }
        points.resize(static_cast<size_t>(m_count) * order);
        for (int e = 0; e < m_count; ++e)
            for (int q = 0; q < order; ++q)
                points[static_cast<size_t>(e) * order + q] =
                    grid.node(e) + shape_right[q] * h;
    }

    // P1 value at quadrature points of element e from interior coefficients
    Complex value(const ComplexVector& c, int e, int q) const {
        const Complex left = (e == 0) ? Complex(0.0) : c[e - 1];
        const Complex right = (e + 1 == m_count) ? Complex(0.0) : c[e];
        const double s = shape_right[q];
        return left * (1.0 - s) + right * s;
    }

    // accumulate integrand values (already multiplied by scaled weights)
    // against the two hat functions of element e
    void scatter(ComplexVector& out, int e, int q, Complex weighted_value) const {
        const double s = shape_right[q];
        if (e > 0) out[e - 1] += weighted_value * (1.0 - s);
        if (e + 1 < m_count) out[e] += weighted_value * s;
    }

    int m_count;
    int order;
    std::vector<double> shape_right;
    std::vector<double> scaled_w;
    std::vector<double> points;
};

std::vector<Complex> qp_exponents(const ModelParams& params, const ElementQuad& eq,
                                  double tau) {
    std::vector<Complex> args(eq.points.size());
    for (size_t i = 0; i < eq.points.size(); ++i)
        args[i] = params.p * params.potential(eq.points[i]) * tau;
    return args;
}

ComplexVector weighted_apply_row(const ComplexVector& coeffs, const ElementQuad& eq,
                                 std::span<const Complex> weight_row) {
    ComplexVector out(eq.m_count - 1, Complex(0.0));
    for (int e = 0; e < eq.m_count; ++e)
        for (int q = 0; q < eq.order; ++q) {
            const size_t i = static_cast<size_t>(e) * eq.order + q;
            const Complex v = weight_row[i] * eq.value(coeffs, e, q) * eq.scaled_w[q];
            eq.scatter(out, e, q, v);
        }
    return out;
}

} // namespace

FemMatrices assemble_fem(const SpaceGrid& grid, const ModelParams& params, double tau,
                         double d0) {
    const int mi = grid.interior_count();
    const double h = grid.h();
    FemMatrices fm{h,
                   std::vector<double>(mi, 4.0 * h / 6.0),
                   std::vector<double>(mi - 1, h / 6.0),
                   std::vector<double>(mi, 2.0 / h),
                   std::vector<double>(mi - 1, -1.0 / h),
                   TridiagonalOperator({0.0}, {1.0}, {0.0})};
    const double scale = d0 / std::pow(tau, params.gamma);
    std::vector<double> sys_diag(mi), sys_off(mi - 1);
    for (int i = 0; i < mi; ++i)
        sys_diag[i] = scale * fm.mass_diag[i] + params.k_gamma * fm.stiff_diag[i];
    for (int i = 0; i < mi - 1; ++i)
        sys_off[i] = scale * fm.mass_off[i] + params.k_gamma * fm.stiff_off[i];
    fm.system = TridiagonalOperator(sys_off, sys_diag, sys_off);
    return fm;
}

ComplexVector weighted_mass_apply(int k, const ComplexVector& coeffs,
                                  const ModelParams& params, const SpaceGrid& grid,
                                  double tau, const QuadratureRule& rule) {
    if (static_cast<int>(coeffs.size()) != grid.interior_count())
        throw GridMismatch("coefficient length must be M-1");
    const ElementQuad eq(grid, rule);
    std::vector<Complex> row(eq.points.size());
    for (size_t i = 0; i < eq.points.size(); ++i)
        row[i] = std::exp(-params.p * params.potential(eq.points[i])
                          * (static_cast<double>(k) * tau));
    return weighted_apply_row(coeffs, eq, row);
}

ComplexVector fem_load(const std::function<Complex(double)>& fn, const SpaceGrid& grid,
                       const QuadratureRule& rule) {
    const ElementQuad eq(grid, rule);
    ComplexVector out(grid.interior_count(), Complex(0.0));
    for (int e = 0; e < eq.m_count; ++e)
        for (int q = 0; q < eq.order; ++q) {
            const size_t i = static_cast<size_t>(e) * eq.order + q;
            eq.scatter(out, e, q, fn(eq.points[i]) * eq.scaled_w[q]);
        }
    return out;
}

FemSolution march_fem(const ModelParams& params, const SpaceGrid& sgrid,
                      const TimeGrid& tgrid, const SourceFn& source,
                      const ComplexVector& ic, Variant variant,
                      const FemOptions& options) {
    validate_model(params, sgrid);
    const int mi = sgrid.interior_count();
    const int N = tgrid.n_count();
    const double tau = tgrid.tau();
    if (static_cast<int>(ic.size()) != mi)
        throw GridMismatch("initial data length must be M-1");
    if (variant == Variant::zero_ic) {
        for (const Complex& v : ic)
            if (v != Complex(0.0))
                throw IncompatibleData("zero_ic variant requires zero initial data");
    }

    const CoefficientTable coeffs = CoefficientTable::build(params.gamma, params.lambda, tau, N);
    const QuadratureRule rule = gauss_legendre(options.quad_order);
    const ElementQuad eq(sgrid, rule);
    const ExpPowers qp_weights(qp_exponents(params, eq, tau), N);
    const FemMatrices fm = assemble_fem(sgrid, params, tau, coeffs.d[0]);

    FemSolution history(sgrid, tgrid);
    history.set_initial(ic);

    // initial data as P1 coefficients for the correction term
    ComplexVector phi_coeffs = ic;
    if (variant == Variant::general_ic
        && options.ic_projection == FemIcProjection::l2_projection) {
        // L2 projection: solve M c = (I_h phi, phi_m) with the P1 interpolant
        // as the integrand (data is only known through its nodal values here)
        TridiagonalOperator mass(fm.mass_off, fm.mass_diag, fm.mass_off);
        ComplexVector load(mi, Complex(0.0));
        for (int e = 0; e < eq.m_count; ++e)
            for (int q = 0; q < eq.order; ++q)
                eq.scatter(load, e, q, eq.value(ic, e, q) * eq.scaled_w[q]);
        phi_coeffs = mass.solve(load);
    }

    const double tau_pow = std::pow(tau, params.gamma);
    ComplexVector rhs(mi);
    for (int n = 1; n <= N; ++n) {
        const double t = tgrid.level(n);
        rhs = fem_load([&](double x) { return source(x, t); }, sgrid, rule);
        auto walker = qp_weights.walker(1);
        ComplexVector hist_acc(mi, Complex(0.0));
        for (int k = 1; k <= n; ++k) {
            const double dk = coeffs.d[k];
            const auto row = walker.row();
            const ComplexVector& level = history.at(n - k);
            for (int e = 0; e < eq.m_count; ++e)
                for (int q = 0; q < eq.order; ++q) {
                    const size_t i = static_cast<size_t>(e) * eq.order + q;
                    eq.scatter(hist_acc, e, q,
                               dk * row[i] * eq.value(level, e, q) * eq.scaled_w[q]);
                }
            if (variant == Variant::general_ic && k == n) {
                // same weight row carries e^{-p U n tau}; the remaining
                // e^{-lambda t_n} factor is scalar
                const double qn = coeffs.q_partial[n];
                const Complex corr_scale = std::exp(-params.lambda * t) * qn / tau_pow;
                ComplexVector corr = weighted_apply_row(phi_coeffs, eq, row);
                for (int i = 0; i < mi; ++i)
                    rhs[i] += corr_scale * corr[i];
            }
            if (k < n) walker.advance();
        }
        for (int i = 0; i < mi; ++i)
            rhs[i] -= hist_acc[i] / tau_pow;
        history.push(fm.system.solve(rhs));
    }
    return history;
}

} // namespace tfkac
