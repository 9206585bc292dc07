#pragma once

#include "tfkac/coeffs.hpp"
#include "tfkac/core.hpp"

#include <span>
#include <vector>

namespace tfkac {

/// Rolling powers w_i^k of per-point factors w_i = e^{-p U(x_i) tau}.
/// Powers advance by one complex multiply per point; every 64 levels the row
/// is reset from a precomputed direct-exponential row to bound roundoff
/// drift.
class ExpPowers {
public:
    ExpPowers(const std::vector<Complex>& exponents_times_tau, int max_level);

    int point_count() const { return static_cast<int>(base_.size()); }
    int max_level() const { return max_level_; }

    class Walker {
    public:
        Walker(const ExpPowers& owner, int level);
        void advance();
        int level() const { return level_; }
        std::span<const Complex> row() const { return row_; }

    private:
        void load(int level);
        const ExpPowers* owner_;
        int level_;
        std::vector<Complex> row_;
    };

    Walker walker(int start_level = 0) const { return Walker(*this, start_level); }

    /// Direct evaluation e^{-arg_i * k} (slow path; tests and spot checks).
    Complex at(int i, int k) const;

    static constexpr int kRefreshStride = 64;

private:
    friend class Walker;
    std::vector<Complex> arg_;                    // exponent per point (already times tau)
    std::vector<Complex> base_;                   // e^{-arg_i}
    std::vector<std::vector<Complex>> refresh_;   // rows at k = 0, 64, 128, ...
    int max_level_;
};

/// Diagonal weight rows w_{m,k} = e^{-p U(x_m) k tau} for the interior nodes,
/// k = 0..N. |w| <= 1 whenever Re(p U) >= 0; row 0 is identically one.
class HistoryWeights {
public:
    HistoryWeights(const ModelParams& params, const SpaceGrid& grid, double tau, int max_level);

    const ExpPowers& powers() const { return powers_; }
    int node_count() const { return powers_.point_count(); }
    int max_level() const { return powers_.max_level(); }
    Complex at(int m, int k) const { return powers_.at(m, k); }

private:
    ExpPowers powers_;
};

/// Discrete tempered fractional substantial derivative at level n:
///   (1/tau^gamma) sum_{k=0}^{n} d_k w_{.,k} (.) G^{n-k},
/// the left side of the fully discrete equation.
ComplexVector substantial_history_sum(const CoefficientTable& coeffs,
                                      const HistoryWeights& weights,
                                      const SolutionHistory& history, int n);

/// Same sum restricted to k >= 1 (the part a time step moves to the right
/// hand side; the k = 0 term sits in the system matrix).
ComplexVector history_tail_sum(const CoefficientTable& coeffs,
                               const HistoryWeights& weights,
                               const SolutionHistory& history, int n);

/// Initial-data subtraction term of the scheme that does not require zero
/// initial values:
///   (e^{-(lambda + p U(x_m)) n tau} / tau^gamma) (sum_{k=0}^{n} g_k) phi_m.
ComplexVector general_ic_correction(const ComplexVector& phi, const ModelParams& params,
                                    const SpaceGrid& grid, int n, double tau,
                                    const CoefficientTable& coeffs);

} // namespace tfkac
