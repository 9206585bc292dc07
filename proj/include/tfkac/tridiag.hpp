#pragma once

#include "tfkac/core.hpp"

#include <vector>

namespace tfkac {

/// Real tridiagonal matrix with a one-time LU (Thomas) factorization, applied
/// to complex right-hand sides. Solving costs O(M) per call.
class TridiagonalOperator {
public:
    TridiagonalOperator(std::vector<double> sub, std::vector<double> diag,
                        std::vector<double> super);

    int size() const { return static_cast<int>(diag_.size()); }
    const std::vector<double>& sub() const { return sub_; }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& super() const { return super_; }

    ComplexVector solve(const ComplexVector& rhs) const;
    ComplexVector apply(const ComplexVector& x) const;

private:
    std::vector<double> sub_, diag_, super_;
    std::vector<double> pivot_;  // factored diagonal
    std::vector<double> lower_;  // multipliers sub_i / pivot_{i-1}
};

ComplexVector tridiag_solve(const TridiagonalOperator& op, const ComplexVector& rhs);

} // namespace tfkac
