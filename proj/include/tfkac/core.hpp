#pragma once

#include "tfkac/errors.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace tfkac {

using Complex = std::complex<double>;

/// Nodal values at the interior grid points m = 1..M-1 (boundary values are
/// implicitly zero wherever a norm or a scheme needs them).
using ComplexVector = std::vector<Complex>;

/// Continuous problem definition: fractional order gamma in (0,1), tempering
/// lambda >= 0, diffusion coefficient k_gamma > 0, Laplace dual p of the
/// functional, potential U(x) >= 0, and the spatial interval (a,b).
struct ModelParams {
    double gamma = 0.5;
    double lambda = 0.0;
    double k_gamma = 1.0;
    Complex p{0.0, 0.0};
    std::function<double(double)> potential = [](double x) { return x; };
    double a = 0.0;
    double b = 1.0;
};

/// Uniform space partition of [a,b] into M cells, nodes x_m = a + m h.
class SpaceGrid {
public:
    SpaceGrid(double a, double b, int m_count);

    double a() const { return a_; }
    double b() const { return b_; }
    int m_count() const { return m_count_; }
    double h() const { return h_; }
    double node(int m) const { return a_ + h_ * m; }
    int interior_count() const { return m_count_ - 1; }

private:
    double a_, b_, h_;
    int m_count_;
};

/// Uniform time partition of [0,T] into N steps, levels t_n = n tau.
class TimeGrid {
public:
    TimeGrid(double t_final, int n_count);

    double t_final() const { return t_final_; }
    int n_count() const { return n_count_; }
    double tau() const { return tau_; }
    double level(int n) const { return tau_ * n; }

private:
    double t_final_, tau_;
    int n_count_;
};

/// All time-level nodal vectors G^0..G^N. The substantial-derivative history
/// sum is nonlocal in time, so every level is kept.
class SolutionHistory {
public:
    SolutionHistory(const SpaceGrid& sgrid, const TimeGrid& tgrid);

    const SpaceGrid& space_grid() const { return sgrid_; }
    const TimeGrid& time_grid() const { return tgrid_; }

    void set_initial(ComplexVector level0);
    void push(ComplexVector level);

    /// Number of levels stored so far (N+1 when the march is complete).
    int level_count() const { return static_cast<int>(levels_.size()); }
    const ComplexVector& at(int n) const;
    const ComplexVector& back() const { return levels_.back(); }

private:
    SpaceGrid sgrid_;
    TimeGrid tgrid_;
    std::vector<ComplexVector> levels_;
};

SpaceGrid build_space_grid(double a, double b, int m_count);
TimeGrid build_time_grid(double t_final, int n_count);

/// Checks every model invariant on the given grid nodes and returns the
/// params unchanged; throws the first violated constraint otherwise.
/// Re(p U(x)) >= 0 is required at every node (both schemes' stability needs
/// it); Re(p) > 0 alone is a physical constraint and is not enforced.
ModelParams validate_model(const ModelParams& raw, const SpaceGrid& grid);

} // namespace tfkac
