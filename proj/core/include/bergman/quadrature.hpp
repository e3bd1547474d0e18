#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bergman/summation.hpp"

namespace bergman {

/// Gauss-Jacobi rule on (0,1) for the measure (1-u)^alpha du.
/// Exact for all polynomials of degree <= 2*order - 1.
struct QuadratureRule {
    double alpha = 0.0;
    std::vector<double> nodes;   // ascending, strictly inside (0,1)
    std::vector<double> weights; // positive, summing to 1/(alpha+1)

    int order() const { return static_cast<int>(nodes.size()); }
};

/// Builds the rule by the Golub-Welsch method: the symmetric tridiagonal
/// Jacobi matrix of the shifted three-term recurrence is diagonalized with an
/// implicit-shift QL sweep that carries only the first eigenvector row.
/// Throws QuadratureError on invalid parameters or non-convergence.
QuadratureRule gauss_jacobi_rule(int order, double alpha);

/// Process-wide memoized rules keyed by (order, alpha); thread-safe.
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(int order, double alpha);

/// sum_i w_i f(u_i) with a fixed sequential order. Double mode uses
/// compensated summation; Extended accumulates two_prod terms in
/// double-double.
double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f,
                 Precision precision = Precision::Double);

/// As integrate(), but over precomputed integrand values at the nodes.
double weighted_sum(const QuadratureRule& rule,
                    const std::vector<double>& values,
                    Precision precision = Precision::Double);

} // namespace bergman
