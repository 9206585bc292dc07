#include "tfkac/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace tfkac {

namespace {

// Golub-Welsch for the weight (1-x)^alpha (1+x)^beta on (-1,1): eigenvalues
// of the symmetric tridiagonal recurrence matrix are the nodes, squared
// first eigenvector components scaled by the zeroth moment are the weights.
QuadratureRule golub_welsch(double alpha, double beta, int order) {
    const int K = order;
    Eigen::VectorXd diag(K), sub(K - 1 > 0 ? K - 1 : 0);
    const double apb = alpha + beta;
    diag(0) = (beta - alpha) / (apb + 2.0);
    for (int k = 1; k < K; ++k) {
        const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        diag(k) = (beta * beta - alpha * alpha) / den;
    }
    for (int k = 1; k < K; ++k) {
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta)
                 / ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
        } else {
            const double t = 2.0 * k + apb;
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + apb)
                 / (t * t * (t + 1.0) * (t - 1.0));
        }
        sub(k - 1) = std::sqrt(b2);
    }
    const double mu0 = std::pow(2.0, apb + 1.0) * std::tgamma(alpha + 1.0)
                       * std::tgamma(beta + 1.0) / std::tgamma(apb + 2.0);
    QuadratureRule rule;
    rule.order = K;
    rule.nodes.resize(K);
    rule.weights.resize(K);
    if (K == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    for (int i = 0; i < K; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

QuadratureRule gauss_jacobi(double gamma, int order) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw GammaOutOfRange("jacobi weight requires gamma in (0,1)");
    if (order < 1) throw OrderTooLarge("rule order must be >= 1");
    if (order > 128) throw OrderTooLarge("jacobi rules support K <= 128");
    QuadratureRule rule = golub_welsch(-gamma, 0.0, order);
    rule.kind = RuleKind::jacobi;
    rule.gamma = gamma;
    return rule;
}

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw OrderTooLarge("rule order must be >= 1");
    if (order > 64) throw OrderTooLarge("legendre rules support K <= 64");
    QuadratureRule rule = golub_welsch(0.0, 0.0, order);
    rule.kind = RuleKind::legendre;
    return rule;
}

Complex rl_integral(double gamma, const std::function<Complex(double)>& v, double t,
                    const QuadratureRule& rule) {
    if (rule.kind != RuleKind::jacobi || rule.gamma != gamma)
        throw RuleMismatch("rl_integral needs a jacobi rule built with the same gamma");
    if (t == 0.0) return Complex(0.0);
    Complex acc(0.0);
    for (int j = 0; j < rule.order; ++j)
        acc += rule.weights[j] * v(t * (1.0 + rule.nodes[j]) / 2.0);
    return std::pow(t / 2.0, 1.0 - gamma) / std::tgamma(1.0 - gamma) * acc;
}

Complex caputo_of(double gamma, const std::function<Complex(double)>& v_prime, double t,
                  const QuadratureRule& rule) {
    return rl_integral(gamma, v_prime, t, rule);
}

} // namespace tfkac
