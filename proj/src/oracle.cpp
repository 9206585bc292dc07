#include "tfkac/oracle.hpp"

#include <cmath>

namespace tfkac {
namespace oracle {

namespace {

class KahanSum {
public:
    void add(Complex value) {
        const Complex y = value - comp_;
        const Complex t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    Complex value() const { return sum_; }

private:
    Complex sum_{0.0};
    Complex comp_{0.0};
};

Complex simpson(const std::function<Complex(double)>& f, double a, double b, Complex fa,
                Complex fm, Complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

Complex adaptive_step(const std::function<Complex(double)>& f, double a, double b,
                      Complex fa, Complex fm, Complex fb, Complex whole, double tol,
                      int depth) {
    const double m = 0.5 * (a + b);
    const Complex fl = f(0.5 * (a + m));
    const Complex fr = f(0.5 * (m + b));
    const Complex left = simpson(f, a, m, fa, fl, fm);
    const Complex right = simpson(f, m, b, fm, fr, fb);
    const Complex refined = left + right;
    if (std::abs(refined - whole) <= 15.0 * tol)
        return refined + (refined - whole) / 15.0;
    if (depth <= 0)
        throw ToleranceNotMet("adaptive quadrature recursion limit reached");
    return adaptive_step(f, a, m, fa, fl, fm, left, tol / 2.0, depth - 1)
           + adaptive_step(f, m, b, fm, fr, fb, right, tol / 2.0, depth - 1);
}

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b,
                         double tol) {
    const Complex fa = f(a);
    const Complex fm = f(0.5 * (a + b));
    const Complex fb = f(b);
    const Complex whole = simpson(f, a, b, fa, fm, fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

ComplexVector dense_history_oracle(const CoefficientTable& coeffs,
                                   const HistoryWeights& weights,
                                   const SolutionHistory& history, int n) {
    if (n >= history.level_count())
        throw HistoryTooShort("history sum needs levels up to n");
    if (n > coeffs.max_index())
        throw CoefficientTableTooShort("coefficient table does not cover level n");
    const int mi = weights.node_count();
    const double scale = 1.0 / std::pow(coeffs.tau, coeffs.gamma);
    ComplexVector out(mi);
    for (int m = 0; m < mi; ++m) {
        KahanSum acc;
        for (int k = 0; k <= n; ++k)
            acc.add(coeffs.d[k] * weights.at(m, k) * history.at(n - k)[m]);
        out[m] = scale * acc.value();
    }
    return out;
}

Complex adaptive_rl_oracle(double gamma, const std::function<Complex(double)>& v, double t,
                           double tol) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw GammaOutOfRange("gamma must lie in (0,1)");
    if (tol < 1e-15) throw ToleranceNotMet("tolerance below achievable precision");
    if (t == 0.0) return Complex(0.0);
    // with u = (t-xi)^{1-gamma} the kernel disappears:
    //   I^{1-gamma} v(t) = (1/((1-gamma) Gamma(1-gamma))) int_0^{t^{1-gamma}} v(t - u^{1/(1-gamma)}) du
    const double expo = 1.0 / (1.0 - gamma);
    auto integrand = [&](double u) { return v(t - std::pow(u, expo)); };
    const Complex raw = adaptive_simpson(integrand, 0.0, std::pow(t, 1.0 - gamma), tol);
    return raw / ((1.0 - gamma) * std::tgamma(1.0 - gamma));
}

ComplexVector dense_solve_oracle(std::vector<ComplexVector> matrix, ComplexVector rhs) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0 || n > 512) throw BadConfig("dense oracle supports sizes 1..512");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw BadConfig("dense oracle needs a square matrix");
    if (static_cast<int>(rhs.size()) != n)
        throw GridMismatch("rhs length must match the matrix");

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(matrix[col][col]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(matrix[r][col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 1e-300) throw SingularMatrix("pivot vanished at column " + std::to_string(col));
        std::swap(matrix[col], matrix[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = matrix[r][col] / matrix[col][col];
            if (factor == Complex(0.0)) continue;
            for (int c = col; c < n; ++c)
                matrix[r][c] -= factor * matrix[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    ComplexVector x(n);
    for (int r = n - 1; r >= 0; --r) {
        Complex acc = rhs[r];
        for (int c = r + 1; c < n; ++c)
            acc -= matrix[r][c] * x[c];
        x[r] = acc / matrix[r][r];
    }
    return x;
}

} // namespace oracle
} // namespace tfkac
