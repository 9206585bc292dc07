#include "tfkac/laplace.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace tfkac {

namespace {

void check_config(const InversionConfig& cfg) {
    if (!(cfg.a_tilde > 0.0)) throw BadConfig("a_tilde must be > 0");
    if (cfg.k1 < 1) throw BadConfig("k1 must be >= 1");
    if (cfg.k2 < 0 || cfg.k2 > 40)
        throw ConfigOverflow("k2 must lie in [0,40] to keep binomial weights exact");
    if (!cfg.evaluator) throw EvaluatorFailure("no evaluator configured");
}

std::vector<Complex> evaluate_contour(double A, int j_max, const InversionConfig& cfg) {
    if (!(A > 0.0)) throw BadConfig("inversion point A must be > 0");
    std::vector<Complex> vals(static_cast<size_t>(j_max) + 1);
    const double base = cfg.a_tilde / (2.0 * A);
    for (int j = 0; j <= j_max; ++j) {
        const Complex pj(base, j * std::numbers::pi / A);
        Complex value;
        try {
            value = cfg.evaluator(pj);
        } catch (const std::exception& e) {
            throw EvaluatorFailure(std::string("transform evaluation failed: ") + e.what());
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
            throw EvaluatorFailure("transform value is not finite");
        vals[j] = value;
    }
    return vals;
}

// running partial sums s_0..s_{n_max} from the contour values
std::vector<double> partial_sums(double A, const std::vector<Complex>& vals,
                                 const InversionConfig& cfg) {
    const double pref = std::exp(cfg.a_tilde / 2.0);
    std::vector<double> s(vals.size());
    s[0] = pref / (2.0 * A) * vals[0].real();
    double sign = -1.0;
    for (size_t j = 1; j < vals.size(); ++j) {
        s[j] = s[j - 1] + pref / A * sign * vals[j].real();
        sign = -sign;
    }
    return s;
}

} // namespace

double partial_sum(double A, int n, const InversionConfig& cfg) {
    check_config(cfg);
    if (n < 0) throw BadConfig("partial sum index must be >= 0");
    const auto vals = evaluate_contour(A, n, cfg);
    return partial_sums(A, vals, cfg).back();
}

double euler_invert(double A, const InversionConfig& cfg) {
    check_config(cfg);
    const auto vals = evaluate_contour(A, cfg.k1 + cfg.k2, cfg);
    const auto s = partial_sums(A, vals, cfg);
    // binomial weights by Pascal recurrence: C(K2,k) 2^{-K2}
    std::vector<double> w(static_cast<size_t>(cfg.k2) + 1, 1.0);
    for (int row = 1; row <= cfg.k2; ++row)
        for (int k = row; k >= 1; --k)
            w[k] += w[k - 1];
    const double scale = std::pow(2.0, -cfg.k2);
    double acc = 0.0;
    for (int k = 0; k <= cfg.k2; ++k)
        acc += w[k] * scale * s[static_cast<size_t>(cfg.k1 + k)];
    return acc;
}

} // namespace tfkac
