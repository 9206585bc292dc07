#include "tfkac/coeffs.hpp"

#include <cmath>
#include <string>

namespace tfkac {

namespace {

constexpr int kMaxTableSize = 1 << 16;

void check_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw GammaOutOfRange("gamma must lie in (0,1), got " + std::to_string(gamma));
}

void check_n(int n) {
    if (n < 0) throw BadConfig("coefficient index must be >= 0");
    if (n > kMaxTableSize)
        throw BadConfig("coefficient tables support N <= " + std::to_string(kMaxTableSize));
}

} // namespace

std::vector<double> grunwald(double gamma, int n) {
    check_gamma(gamma);
    check_n(n);
    std::vector<double> g(static_cast<size_t>(n) + 1);
    g[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        g[k] = (1.0 - (gamma + 1.0) / k) * g[k - 1];
    return g;
}

std::vector<double> tempered_grunwald(double gamma, double lambda, double tau, int n) {
    if (lambda < 0.0)
        throw NegativeTempering("lambda must be >= 0, got " + std::to_string(lambda));
    if (!(tau > 0.0)) throw BadPartition("tau must be > 0");
    std::vector<double> g = grunwald(gamma, n);
    if (lambda > 0.0) {
        for (int k = 1; k <= n; ++k)
            g[k] *= std::exp(-k * lambda * tau);
    }
    return g;
}

std::vector<double> d_coeffs(double gamma, double lambda, double tau, int n) {
    std::vector<double> d = tempered_grunwald(gamma, lambda, tau, n);
    const double lt = lambda * tau;
    d[0] = 1.0 - std::exp(-gamma * lt) * std::pow(lt, gamma);
    return d;
}

std::vector<double> q_partial_sums(double gamma, int n) {
    std::vector<double> q = grunwald(gamma, n);
    for (int k = 1; k <= n; ++k)
        q[k] += q[k - 1];
    return q;
}

CoefficientTable CoefficientTable::build(double gamma, double lambda, double tau, int n) {
    CoefficientTable t;
    t.gamma = gamma;
    t.lambda = lambda;
    t.tau = tau;
    t.g_plain = grunwald(gamma, n);
    t.g_tempered = tempered_grunwald(gamma, lambda, tau, n);
    t.d = d_coeffs(gamma, lambda, tau, n);
    t.q_partial = q_partial_sums(gamma, n);
    return t;
}

} // namespace tfkac
