#include "tfkac/manufactured.hpp"

#include "tfkac/special.hpp"

#include <cmath>
#include <memory>
#include <mutex>

namespace tfkac {

namespace {

double lambda_pow(double lambda, double gamma) {
    return lambda == 0.0 ? 0.0 : std::pow(lambda, gamma);
}

void require_unit_interval(const ModelParams& params) {
    if (params.a != 0.0 || params.b != 1.0)
        throw BadConfig("example problems are defined on (0,1)");
}

// spatial bracket of the second derivative of e^{-p x t} (sin x - x sin 1)
Complex sin_bracket(Complex p, double x, double t) {
    const Complex pt = p * t;
    return (pt * pt - 1.0) * std::sin(x) - 2.0 * pt * std::cos(x)
           + (2.0 * pt - pt * pt * x) * std::sin(1.0);
}

} // namespace

ComplexVector ManufacturedProblem::initial_on(const SpaceGrid& grid) const {
    ComplexVector out(grid.interior_count());
    for (int m = 1; m < grid.m_count(); ++m)
        out[m - 1] = initial(grid.node(m));
    return out;
}

Complex ManufacturedProblem::reconstruct(Complex w, double x, double t) const {
    if (!lifted || !lift_term) return w;
    return w + lift_term(x, t);
}

ManufacturedProblem lift_boundary(const ManufacturedProblem& problem,
                                  const ModelParams& params) {
    const double a = params.a, b = params.b;
    const Complex phi_a = problem.initial(a);
    const Complex phi_b = problem.initial(b);
    if (std::abs(phi_a - problem.boundary_left(0.0)) > 1e-12
        || std::abs(phi_b - problem.boundary_right(0.0)) > 1e-12)
        throw IncompatibleData("initial and boundary data disagree at the corners");

    const Complex ua = params.p * params.potential(a);
    const Complex ub = params.p * params.potential(b);
    const double lambda = params.lambda;
    auto initial = problem.initial;
    auto psi_l = problem.boundary_left;
    auto psi_r = problem.boundary_right;
    auto pot = params.potential;
    const Complex p = params.p;

    auto lift = [=](double x, double t) -> Complex {
        const Complex decay = std::exp(-(lambda + p * pot(x)) * t);
        const Complex right = (x - a) / (b - a)
                              * (psi_r(t) * std::exp((lambda + ub) * t) - phi_b);
        const Complex left = (b - x) / (b - a)
                             * (psi_l(t) * std::exp((lambda + ua) * t) - phi_a);
        return (initial(x) + right + left) * decay;
    };

    ManufacturedProblem out;
    out.lifted = true;
    out.lift_term = lift;
    out.source = problem.source;
    if (problem.exact) {
        auto exact = problem.exact;
        out.exact = [=](double x, double t) { return exact(x, t) - lift(x, t); };
    }
    return out;
}

ManufacturedProblem example1(const ModelParams& params) {
    require_unit_interval(params);
    const double gamma = params.gamma, lambda = params.lambda, kg = params.k_gamma;
    const Complex p = params.p;
    const double lg = lambda_pow(lambda, gamma);
    const double cap_scale = 2.0 / std::tgamma(3.0 - gamma);

    ManufacturedProblem out;
    out.exact = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        return (t * t + 1.0) * std::exp(-(lambda + p * x) * t) * v;
    };
    out.exact_dx = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        const double vp = std::cos(x) - std::sin(1.0);
        return (t * t + 1.0) * std::exp(-(lambda + p * x) * t) * (vp - p * t * v);
    };
    out.source = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        const Complex decay = std::exp(-(lambda + p * x) * t);
        const double caputo = t > 0.0 ? cap_scale * std::pow(t, 2.0 - gamma) : 0.0;
        return decay
               * (v * (caputo - lg * (t * t + 1.0))
                  - kg * (t * t + 1.0) * sin_bracket(p, x, t));
    };
    out.initial = [](double x) { return Complex(std::sin(x) - x * std::sin(1.0)); };
    return out;
}

ManufacturedProblem example1_lifted(const ModelParams& params) {
    require_unit_interval(params);
    const double gamma = params.gamma, lambda = params.lambda, kg = params.k_gamma;
    const Complex p = params.p;
    const double lg = lambda_pow(lambda, gamma);
    const double cap_scale = 2.0 / std::tgamma(3.0 - gamma);

    ManufacturedProblem out;
    out.lifted = true;
    out.lift_term = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        return std::exp(-(lambda + p * x) * t) * v;
    };
    out.exact = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        return t * t * std::exp(-(lambda + p * x) * t) * v;
    };
    out.exact_dx = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        const double vp = std::cos(x) - std::sin(1.0);
        return t * t * std::exp(-(lambda + p * x) * t) * (vp - p * t * v);
    };
    out.source = [=](double x, double t) {
        const double v = std::sin(x) - x * std::sin(1.0);
        const Complex decay = std::exp(-(lambda + p * x) * t);
        const double caputo = t > 0.0 ? cap_scale * std::pow(t, 2.0 - gamma) : 0.0;
        return decay
               * (v * (caputo - lg * t * t) - kg * t * t * sin_bracket(p, x, t));
    };
    return out;
}

ManufacturedProblem example2(const ModelParams& params, const QuadratureRule& rule) {
    require_unit_interval(params);
    if (rule.kind != RuleKind::jacobi || rule.gamma != params.gamma)
        throw RuleMismatch("example2 needs a jacobi rule built with the model gamma");
    const double gamma = params.gamma, lambda = params.lambda, kg = params.k_gamma;
    const Complex p = params.p;
    const double lg = lambda_pow(lambda, gamma);

    // the three fractional-time scalars are x-independent; cache them per level
    struct Cache {
        std::mutex mu;
        double t = -1.0;
        Complex c1, c2, i1;
    };
    auto cache = std::make_shared<Cache>();
    auto scalars = [=](double t, Complex& c1, Complex& c2, Complex& i1) {
        std::lock_guard<std::mutex> lock(cache->mu);
        if (cache->t != t) {
            const Complex lp = lambda + p;
            auto w1p = [=](double s) {
                return std::exp(lp * s) * (lp * (std::exp(-s) - 1.0) - std::exp(-s));
            };
            auto w2p = [=](double s) { return std::exp(lambda * s) * (1.0 + lambda * s); };
            auto e_lam = [=](double s) { return Complex(std::exp(lambda * s)); };
            cache->c1 = caputo_of(gamma, w1p, t, rule);
            cache->c2 = caputo_of(gamma, w2p, t, rule);
            cache->i1 = rl_integral(gamma, e_lam, t, rule);
            cache->t = t;
        }
        c1 = cache->c1;
        c2 = cache->c2;
        i1 = cache->i1;
    };

    ManufacturedProblem out;
    out.lifted = true;
    out.lift_term = [=](double x, double t) {
        return ((std::exp(-t) - 1.0) * std::exp(p * t) * x + t * (1.0 - x))
               * std::exp(-p * x * t);
    };
    out.source = [=](double x, double t) -> Complex {
        Complex c1, c2, i1; // all vanish at t = 0; the algebraic part does not
        scalars(t, c1, c2, i1);
        const Complex decay = std::exp(-(lambda + p * x) * t);
        const Complex e_px = std::exp(-p * x * t);
        const Complex pt = p * t;
        Complex g = -(x * c1 + (1.0 - x) * c2) * decay;
        g += lg * ((std::exp(-t) - 1.0) * x * std::exp(p * t) + t * (1.0 - x) - 1.0) * e_px;
        g += lambda * decay * i1;
        g += kg
             * ((std::exp(-t) - 1.0) * (pt * pt * x - 2.0 * pt) * std::exp(p * t)
                + t * t * (-p * pt * x + p * pt + 2.0 * p))
             * e_px;
        return g;
    };
    return out;
}

ManufacturedProblem example3(const ModelParams& params) {
    require_unit_interval(params);
    const double gamma = params.gamma, lambda = params.lambda, kg = params.k_gamma;
    const Complex p = params.p;
    const double lg = lambda_pow(lambda, gamma);
    const double mu = 1.0 - gamma;
    const double gamma_mu = std::tgamma(mu);

    ManufacturedProblem out;
    out.exact = [=](double x, double t) {
        return t * t * std::exp(-lambda * t) * (x - x * x * x) / (p + 2.0);
    };
    out.exact_dx = [=](double x, double t) {
        return t * t * std::exp(-lambda * t) * (1.0 - 3.0 * x * x) / (p + 2.0);
    };
    out.source = [=](double x, double t) -> Complex {
        if (t == 0.0) return Complex(0.0);
        const double u = x - x * x * x;
        const Complex a = p * x;
        const Complex z = a * t;
        const Complex a0 = std::pow(t, mu) * lower_incomplete_gamma_scaled(mu, z);
        const Complex a1 = std::pow(t, mu + 1.0) * lower_incomplete_gamma_scaled(mu + 1.0, z);
        const Complex a2 = std::pow(t, mu + 2.0) * lower_incomplete_gamma_scaled(mu + 2.0, z);
        const Complex cd =
            ((2.0 * t + a * t * t) * a0 - 2.0 * (1.0 + a * t) * a1 + a * a2) / gamma_mu;
        const double e_lam = std::exp(-lambda * t);
        return (u * e_lam / (p + 2.0)) * (cd - lg * t * t)
               + 6.0 * kg * x * t * t * e_lam / (p + 2.0);
    };
    return out;
}

} // namespace tfkac
