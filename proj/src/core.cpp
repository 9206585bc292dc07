#include "tfkac/core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace tfkac {

SpaceGrid::SpaceGrid(double a, double b, int m_count)
    : a_(a), b_(b), h_((b - a) / m_count), m_count_(m_count) {
    if (!(a < b)) throw BadPartition("space interval requires a < b");
    if (m_count < 2) throw BadPartition("space partition requires M >= 2");
}

TimeGrid::TimeGrid(double t_final, int n_count)
    : t_final_(t_final), tau_(t_final / n_count), n_count_(n_count) {
    if (!(t_final > 0.0)) throw BadPartition("time horizon requires T > 0");
    if (n_count < 1) throw BadPartition("time partition requires N >= 1");
}

SpaceGrid build_space_grid(double a, double b, int m_count) {
    return SpaceGrid(a, b, m_count);
}

TimeGrid build_time_grid(double t_final, int n_count) {
    return TimeGrid(t_final, n_count);
}

SolutionHistory::SolutionHistory(const SpaceGrid& sgrid, const TimeGrid& tgrid)
    : sgrid_(sgrid), tgrid_(tgrid) {
    levels_.reserve(tgrid.n_count() + 1);
}

void SolutionHistory::set_initial(ComplexVector level0) {
    if (static_cast<int>(level0.size()) != sgrid_.interior_count())
        throw GridMismatch("initial data length must be M-1");
    levels_.clear();
    levels_.push_back(std::move(level0));
}

void SolutionHistory::push(ComplexVector level) {
    if (levels_.empty())
        throw HistoryTooShort("set_initial must precede push");
    if (static_cast<int>(level.size()) != sgrid_.interior_count())
        throw GridMismatch("level length must be M-1");
    if (level_count() > tgrid_.n_count())
        throw BadPartition("history already holds N+1 levels");
    levels_.push_back(std::move(level));
}

const ComplexVector& SolutionHistory::at(int n) const {
    if (n < 0 || n >= level_count())
        throw HistoryTooShort("level " + std::to_string(n) + " not stored");
    return levels_[static_cast<size_t>(n)];
}

ModelParams validate_model(const ModelParams& raw, const SpaceGrid& grid) {
    if (!(raw.gamma > 0.0 && raw.gamma < 1.0))
        throw GammaOutOfRange("gamma must lie in (0,1), got " + std::to_string(raw.gamma));
    if (raw.lambda < 0.0)
        throw NegativeTempering("lambda must be >= 0, got " + std::to_string(raw.lambda));
    if (!(raw.k_gamma > 0.0))
        throw NonpositiveDiffusion("k_gamma must be > 0, got " + std::to_string(raw.k_gamma));
    if (!(raw.a < raw.b)) throw BadPartition("model interval requires a < b");
    for (int m = 0; m <= grid.m_count(); ++m) {
        const double x = grid.node(m);
        const double u = raw.potential(x);
        if (u < 0.0) {
            std::ostringstream os;
            os << "U(" << x << ") = " << u;
            throw NegativePotential(os.str());
        }
        const double re_pu = raw.p.real() * u;
        if (re_pu < 0.0) {
            std::ostringstream os;
            os << "Re(p U) = " << re_pu << " at x = " << x;
            throw ReParameterNegative(os.str());
        }
    }
    return raw;
}

} // namespace tfkac
