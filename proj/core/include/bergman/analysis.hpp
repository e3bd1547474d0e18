#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/projector.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// The integration-by-parts decomposition of the multiplier difference
/// t_n - t_{n-1} = B(n)/A(n) = C1 C2 / ((2n+2) 2n A) - C3 C4 / (2n (2n+1) A).
/// Every integrand is (1-u)^alpha times a smooth factor; the stabilized
/// quotient g = (1-M)/(1-r^2) replaces any (1-r^2)^{alpha-1} term.
struct MultiplierDelta {
    int n = 0;
    double a = 0.0;  // A(n) = I_n(mu) I_{n-1}(mu)
    double c1 = 0.0; // int r^{2n+2} [(1-M)(1-r^2)^alpha]'
    double c2 = 0.0; // int r^{2n}   [M (1-r^2)^{alpha+1}]'
    double c3 = 0.0; // int r^{2n+1} [(1-M)(1-r^2)^{alpha+1}]''
    double c4 = 0.0; // I_n(mu)
    double delta_direct = 0.0; // t_n - t_{n-1} as a raw difference of ratios
    double delta_ibp = 0.0;    // the stabilized two-term form above
};

MultiplierDelta multiplier_delta(const WeightSpec& mu, int n,
                                 Precision precision = Precision::Double,
                                 int order_scale = 1);

/// Limits of the two ratio sequences and of n^2 (t_n - t_{n-1}):
///   L12 = 2 (alpha+1)^2 M'(1)
///   L34 = 2 (alpha+2)(alpha+1) M'(1) - 2 (alpha+1)(1 - M(1))
///   delta_inf = (L12 - L34) / 4   ( = -(alpha+1) M'(1) / 2 when M(1) = 1 )
struct DeltaLimits {
    double l12 = 0.0;
    double l34 = 0.0;
    double delta_inf = 0.0;
};

DeltaLimits delta_limits(const WeightSpec& mu, double alpha);

/// One row of the empirical limit table.
struct LimitRow {
    int n = 0;
    double t_n = 0.0;
    double n2_delta = 0.0;      // n^2 * delta_ibp
    double c1c2_over_a = 0.0;   // -> L12
    double c3c4_over_a = 0.0;   // -> L34
};

std::vector<LimitRow> limit_convergence(const WeightSpec& mu, double alpha,
                                        const std::vector<int>& ns,
                                        Precision precision = Precision::Double);

/// One-level Richardson step for sequences with O(1/n) limit approach,
/// anchored at the dyadic pair (n, 2n): returns 2 s(2n) - s(n).
inline double richardson_dyadic(double s_at_n, double s_at_2n) {
    return 2.0 * s_at_2n - s_at_n;
}

enum class DeltaMethod { Direct, Ibp };

struct BVOptions {
    int order_scale = 1;   // multiplies the quadrature order policy
    int crossover = 100;   // delta_direct for n <= crossover, delta_ibp above
    int overlap_lo = 50;   // cross-validation window [overlap_lo, crossover]
    Precision precision = Precision::Double;
};

/// Bounded-variation report for the multiplier sequence of mu.
struct BVReport {
    WeightSpec weight;
    double alpha = 0.0;
    int n_max = 0;
    double sup_scaled = 0.0; // max_n n^2 |delta_n|
    double bv_partial = 0.0; // |t_0| + sum_{n<=n_max} |delta_n|
    double limit_gap = 0.0;  // |t_{n_max} - 1/M(1)|
    DeltaLimits predicted;
    std::vector<double> t;            // t_0..t_{n_max}
    std::vector<double> delta;        // delta[n] for n in 1..n_max; delta[0] = 0
    std::vector<DeltaMethod> method;  // per delta entry
};

/// Assembles the report; throws CheckError if the direct and stabilized
/// differences disagree beyond 1e-6 relative scale in the overlap window.
BVReport bv_report(const WeightSpec& mu, double alpha, int n_max,
                   const BVOptions& options = {});

/// Empirical projection-norm ratios ||B f||_{p,mu} / ||f||_{p,mu}.
struct OpNormRow {
    double p = 0.0;
    std::string fn;
    double ratio = 0.0;
};

struct OpNormTable {
    std::vector<OpNormRow> rows;
    double max_ratio = 0.0;
};

OpNormTable opnorm_experiment(const WeightSpec& mu, double p,
                              const std::vector<std::string>& battery, int degree,
                              std::shared_ptr<const PolarGrid> grid);

/// Multi-p variant sharing one projection per battery member.
OpNormTable opnorm_experiment(const WeightSpec& mu, const std::vector<double>& ps,
                              const std::vector<std::string>& battery, int degree,
                              std::shared_ptr<const PolarGrid> grid);

/// Partial-sum rows (N, ||S_N f|| / ||f||, ||S_N f - f||) for dyadic N.
struct SnRow {
    double p = 0.0;
    int n_trunc = 0;
    double ratio = 0.0;
    double err = 0.0;
};

std::vector<SnRow> sn_experiment(const WeightSpec& w, double p,
                                 const std::string& fn_spec, int n_max,
                                 std::shared_ptr<const PolarGrid> grid);

std::vector<SnRow> sn_experiment(const WeightSpec& w, const std::vector<double>& ps,
                                 const std::string& fn_spec, int n_max,
                                 std::shared_ptr<const PolarGrid> grid);

} // namespace bergman
