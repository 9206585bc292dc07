#include "tfkac/norms.hpp"

#include <cmath>

namespace tfkac {

namespace {

double h1_semi_squared(const ComplexVector& v, double h) {
    // difference quotients over all M cells with v_0 = v_M = 0
    double acc = 0.0;
    Complex prev(0.0);
    for (const Complex& cur : v) {
        acc += std::norm(cur - prev);
        prev = cur;
    }
    acc += std::norm(prev); // last cell against the right boundary zero
    return acc / h;
}

} // namespace

LevelNorms level_norms(const ComplexVector& v, const SpaceGrid& grid) {
    if (static_cast<int>(v.size()) != grid.interior_count())
        throw GridMismatch("vector length must be M-1");
    LevelNorms out;
    double l2 = 0.0;
    for (const Complex& c : v) {
        l2 += std::norm(c);
        out.max_h = std::max(out.max_h, std::abs(c));
    }
    out.l2_h = std::sqrt(grid.h() * l2);
    out.h1_semi = std::sqrt(h1_semi_squared(v, grid.h()));
    return out;
}

SpaceTimeNorms spacetime_norms(const SolutionHistory& history) {
    const double tau = history.time_grid().tau();
    SpaceTimeNorms out;
    double h1_acc = 0.0;
    for (int n = 1; n < history.level_count(); ++n) {
        const LevelNorms ln = level_norms(history.at(n), history.space_grid());
        h1_acc += tau * ln.h1_semi * ln.h1_semi;
        out.st_0prime_hinf += tau * ln.max_h;
    }
    out.st_0h1 = std::sqrt(h1_acc);
    return out;
}

double fem_h1_seminorm(const ComplexVector& coeffs, const SpaceGrid& grid) {
    if (static_cast<int>(coeffs.size()) != grid.interior_count())
        throw GridMismatch("coefficient length must be M-1");
    return std::sqrt(h1_semi_squared(coeffs, grid.h()));
}

double refinement_error(const ComplexVector& coarse, const SpaceGrid& coarse_grid,
                        const ComplexVector& fine, const SpaceGrid& fine_grid) {
    if (fine_grid.m_count() != 2 * coarse_grid.m_count())
        throw GridMismatch("fine grid must halve the coarse mesh");
    if (static_cast<int>(coarse.size()) != coarse_grid.interior_count()
        || static_cast<int>(fine.size()) != fine_grid.interior_count())
        throw GridMismatch("coefficient lengths must match their grids");
    // inject the coarse P1 function onto the fine nodes: values coincide at
    // shared nodes, cell midpoints average the endpoints
    ComplexVector diff(fine.size());
    const int mc = coarse_grid.m_count();
    for (int j = 1; j < 2 * mc; ++j) {
        Complex coarse_val;
        if (j % 2 == 0) {
            const int m = j / 2;
            coarse_val = coarse[m - 1];
        } else {
            const int m = (j - 1) / 2; // between coarse nodes m and m+1
            const Complex left = (m == 0) ? Complex(0.0) : coarse[m - 1];
            const Complex right = (m + 1 == mc) ? Complex(0.0) : coarse[m];
            coarse_val = 0.5 * (left + right);
        }
        diff[j - 1] = fine[j - 1] - coarse_val;
    }
    return fem_h1_seminorm(diff, fine_grid);
}

double fem_true_h1_error(const SolutionHistory& solution,
                         const std::function<Complex(double, double)>& exact_dx,
                         const QuadratureRule& rule) {
    if (rule.kind != RuleKind::legendre)
        throw RuleMismatch("element integration expects a legendre rule");
    const SpaceGrid& grid = solution.space_grid();
    const double h = grid.h();
    const double tau = solution.time_grid().tau();
    double acc = 0.0;
    for (int n = 1; n < solution.level_count(); ++n) {
        const double t = solution.time_grid().level(n);
        const ComplexVector& c = solution.at(n);
        double level_acc = 0.0;
        for (int e = 0; e < grid.m_count(); ++e) {
            const Complex left = (e == 0) ? Complex(0.0) : c[e - 1];
            const Complex right = (e + 1 == grid.m_count()) ? Complex(0.0) : c[e];
            const Complex slope = (right - left) / h;
            const double xl = grid.node(e);
            for (int q = 0; q < rule.order; ++q) {
                const double x = xl + (rule.nodes[q] + 1.0) * h / 2.0;
                level_acc += rule.weights[q] * h / 2.0 * std::norm(exact_dx(x, t) - slope);
            }
        }
        acc += tau * level_acc;
    }
    return std::sqrt(acc);
}

} // namespace tfkac
