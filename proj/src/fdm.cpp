#include "tfkac/fdm.hpp"

#include "tfkac/coeffs.hpp"
#include "tfkac/history.hpp"

#include <cmath>

namespace tfkac {

TridiagonalOperator assemble_fdm_system(const ModelParams& params, const SpaceGrid& grid,
                                        double tau, double d0) {
    const int mi = grid.interior_count();
    const double h = grid.h();
    const double diag_val = d0 / std::pow(tau, params.gamma) + 2.0 * params.k_gamma / (h * h);
    const double off_val = -params.k_gamma / (h * h);
    return TridiagonalOperator(std::vector<double>(mi - 1, off_val),
                               std::vector<double>(mi, diag_val),
                               std::vector<double>(mi - 1, off_val));
}

SolutionHistory march_fdm(const ModelParams& params, const SpaceGrid& sgrid,
                          const TimeGrid& tgrid, const SourceFn& source,
                          const ComplexVector& ic, Variant variant) {
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
    const HistoryWeights weights(params, sgrid, tau, N);
    const TridiagonalOperator system = assemble_fdm_system(params, sgrid, tau, coeffs.d[0]);

    SolutionHistory history(sgrid, tgrid);
    history.set_initial(ic);

    ComplexVector rhs(mi);
    for (int n = 1; n <= N; ++n) {
        const double t = tgrid.level(n);
        for (int m = 1; m < sgrid.m_count(); ++m)
            rhs[m - 1] = source(sgrid.node(m), t);
        const ComplexVector tail = history_tail_sum(coeffs, weights, history, n);
        for (int i = 0; i < mi; ++i)
            rhs[i] -= tail[i];
        if (variant == Variant::general_ic) {
            const ComplexVector corr =
                general_ic_correction(history.at(0), params, sgrid, n, tau, coeffs);
            for (int i = 0; i < mi; ++i)
                rhs[i] += corr[i];
        }
        history.push(system.solve(rhs));
    }
    return history;
}

} // namespace tfkac
