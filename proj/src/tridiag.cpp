#include "tfkac/tridiag.hpp"

#include <cmath>

namespace tfkac {

TridiagonalOperator::TridiagonalOperator(std::vector<double> sub, std::vector<double> diag,
                                         std::vector<double> super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
    const int n = size();
    if (n < 1 || static_cast<int>(sub_.size()) != n - 1
        || static_cast<int>(super_.size()) != n - 1)
        throw BadConfig("tridiagonal bands must have sizes n-1, n, n-1");
    pivot_.resize(n);
    lower_.resize(n > 1 ? n - 1 : 0);
    pivot_[0] = diag_[0];
    if (pivot_[0] == 0.0) throw SingularPivot("zero pivot at row 0");
    for (int i = 1; i < n; ++i) {
        lower_[i - 1] = sub_[i - 1] / pivot_[i - 1];
        pivot_[i] = diag_[i] - lower_[i - 1] * super_[i - 1];
        if (pivot_[i] == 0.0 || !std::isfinite(pivot_[i]))
            throw SingularPivot("zero pivot at row " + std::to_string(i));
    }
}

ComplexVector TridiagonalOperator::solve(const ComplexVector& rhs) const {
    const int n = size();
    if (static_cast<int>(rhs.size()) != n)
        throw GridMismatch("rhs length must match operator size");
    ComplexVector x(rhs);
    for (int i = 1; i < n; ++i)
        x[i] -= lower_[i - 1] * x[i - 1];
    x[n - 1] /= pivot_[n - 1];
    for (int i = n - 2; i >= 0; --i)
        x[i] = (x[i] - super_[i] * x[i + 1]) / pivot_[i];
    return x;
}

ComplexVector TridiagonalOperator::apply(const ComplexVector& x) const {
    const int n = size();
    if (static_cast<int>(x.size()) != n)
        throw GridMismatch("vector length must match operator size");
    ComplexVector y(n);
    for (int i = 0; i < n; ++i) {
        Complex acc = diag_[i] * x[i];
        if (i > 0) acc += sub_[i - 1] * x[i - 1];
        if (i + 1 < n) acc += super_[i] * x[i + 1];
        y[i] = acc;
    }
    return y;
}

ComplexVector tridiag_solve(const TridiagonalOperator& op, const ComplexVector& rhs) {
    return op.solve(rhs);
}

} // namespace tfkac
