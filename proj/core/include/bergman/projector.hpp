#pragma once

#include <vector>

#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/moments.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// The coefficient multiplier sequence t_n = b_n / a_n = I_n(lambda_alpha) / I_n(mu),
/// with its first differences left to the analysis module. Entries are
/// computed as ratios of moments (per-entry method tag RatioOfMoments).
struct MultiplierSeq {
    enum class Method { RatioOfMoments };

    WeightSpec weight;     // mu
    double alpha = 0.0;    // the comparison lambda_alpha exponent
    int n_max = 0;
    std::vector<double> t;
    std::vector<Method> method;

    static MultiplierSeq build(const WeightSpec& mu, int n_max,
                               Precision precision = Precision::Double);
};

/// Weighted Bergman projection of a grid function, computed mode by mode:
/// c_n = (1/2) sum_j omega_j fhat_n(r_j) r_j^n M(r_j) / I_n(w), 0 <= n <= N,
/// with I_n(w) evaluated through the same radial rule so polynomials are
/// reproduced to rounding. Negative modes are never read.
/// Requires N < K/2 and N <= R-2.
TaylorCoeffs project(const GridFunction& f, const WeightSpec& w, int n);

/// Coefficient-wise product t_n f_n. Requires degree(f) <= n_max of m.
TaylorCoeffs multiplier_apply(const MultiplierSeq& m, const TaylorCoeffs& f);

/// The composite route: multiply samples by M(r_j), project with
/// lambda_alpha (same alpha), then apply the multiplier sequence of mu.
TaylorCoeffs project_via_identity(const GridFunction& f, const WeightSpec& mu, int n);

/// max_{0<=k<=N} |project(f,mu)_k - project_via_identity(f,mu)_k|.
double identity_residual(const GridFunction& f, const WeightSpec& mu, int n);

/// Default projection degree for a grid: min(K/2 - 1, R - 2, 128).
int default_projection_degree(const PolarGrid& grid);

} // namespace bergman
