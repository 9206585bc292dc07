#include "tfkac/history.hpp"

#include <cmath>

namespace tfkac {

ExpPowers::ExpPowers(const std::vector<Complex>& exponents_times_tau, int max_level)
    : arg_(exponents_times_tau), max_level_(max_level) {
    const int npts = point_count();
    base_.resize(npts);
    for (int i = 0; i < npts; ++i)
        base_[i] = std::exp(-arg_[i]);
    const int rows = max_level_ / kRefreshStride + 1;
    refresh_.resize(rows);
    for (int r = 0; r < rows; ++r) {
        refresh_[r].resize(npts);
        const double k = static_cast<double>(r) * kRefreshStride;
        for (int i = 0; i < npts; ++i)
            refresh_[r][i] = std::exp(-arg_[i] * k);
    }
}

Complex ExpPowers::at(int i, int k) const {
    return std::exp(-arg_[i] * static_cast<double>(k));
}

ExpPowers::Walker::Walker(const ExpPowers& owner, int level) : owner_(&owner) {
    load(level);
}

void ExpPowers::Walker::load(int level) {
    if (level < 0 || level > owner_->max_level_)
        throw CoefficientTableTooShort("weight level out of range");
    level_ = level;
    const int r = level / kRefreshStride;
    row_ = owner_->refresh_[r];
    for (int k = r * kRefreshStride; k < level; ++k)
        for (size_t i = 0; i < row_.size(); ++i)
            row_[i] *= owner_->base_[i];
}

void ExpPowers::Walker::advance() {
    const int next = level_ + 1;
    if (next > owner_->max_level_)
        throw CoefficientTableTooShort("weight level out of range");
    if (next % kRefreshStride == 0) {
        row_ = owner_->refresh_[next / kRefreshStride];
    } else {
        for (size_t i = 0; i < row_.size(); ++i)
            row_[i] *= owner_->base_[i];
    }
    level_ = next;
}

namespace {

std::vector<Complex> node_exponents(const ModelParams& params, const SpaceGrid& grid,
                                    double tau) {
    std::vector<Complex> args(grid.interior_count());
    for (int m = 1; m < grid.m_count(); ++m)
        args[m - 1] = params.p * params.potential(grid.node(m)) * tau;
    return args;
}

ComplexVector weighted_sum(const CoefficientTable& coeffs, const HistoryWeights& weights,
                           const SolutionHistory& history, int n, int k_start) {
    if (n >= history.level_count())
        throw HistoryTooShort("history sum needs levels up to n");
    if (n > coeffs.max_index())
        throw CoefficientTableTooShort("coefficient table does not cover level n");
    const int mi = weights.node_count();
    ComplexVector acc(mi, Complex(0.0));
    auto walker = weights.powers().walker(k_start);
    for (int k = k_start; k <= n; ++k) {
        const double dk = coeffs.d[k];
        const auto row = walker.row();
        const ComplexVector& level = history.at(n - k);
        for (int i = 0; i < mi; ++i)
            acc[i] += dk * row[i] * level[i];
        if (k < n) walker.advance();
    }
    const double scale = 1.0 / std::pow(coeffs.tau, coeffs.gamma);
    for (auto& v : acc) v *= scale;
    return acc;
}

} // namespace

HistoryWeights::HistoryWeights(const ModelParams& params, const SpaceGrid& grid, double tau,
                               int max_level)
    : powers_(node_exponents(params, grid, tau), max_level) {}

ComplexVector substantial_history_sum(const CoefficientTable& coeffs,
                                      const HistoryWeights& weights,
                                      const SolutionHistory& history, int n) {
    return weighted_sum(coeffs, weights, history, n, 0);
}

ComplexVector history_tail_sum(const CoefficientTable& coeffs, const HistoryWeights& weights,
                               const SolutionHistory& history, int n) {
    if (n < 1) return ComplexVector(weights.node_count(), Complex(0.0));
    return weighted_sum(coeffs, weights, history, n, 1);
}

ComplexVector general_ic_correction(const ComplexVector& phi, const ModelParams& params,
                                    const SpaceGrid& grid, int n, double tau,
                                    const CoefficientTable& coeffs) {
    if (n > coeffs.max_index())
        throw CoefficientTableTooShort("coefficient table does not cover level n");
    if (static_cast<int>(phi.size()) != grid.interior_count())
        throw GridMismatch("phi length must be M-1");
    const double qn = coeffs.q_partial[n]; // sum_{k<=n} g_k
    const double scale = 1.0 / std::pow(tau, coeffs.gamma);
    const double t_n = n * tau;
    ComplexVector out(phi.size());
    for (int m = 1; m < grid.m_count(); ++m) {
        const Complex expo = (params.lambda + params.p * params.potential(grid.node(m))) * t_n;
        out[m - 1] = std::exp(-expo) * scale * qn * phi[m - 1];
    }
    return out;
}

} // namespace tfkac
