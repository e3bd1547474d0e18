#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Radial moment I_n = int_0^1 r^{2n+1} M(r) (1-r^2)^alpha dr, computed as
/// (1/2) int_0^1 u^n M(sqrt u) (1-u)^alpha du with the Jacobi factor carried
/// by the quadrature weights. Returns (I_n, err) where err is the
/// order-doubling difference |I(Q) - I(Q+8)|.
std::pair<double, double> moment(const WeightSpec& w, int n,
                                 Precision precision = Precision::Double);

/// Quadrature order policy: exact for poly-r2 of degree d, generous for exp.
int moment_order_policy(const WeightSpec& w, int n);

/// Closed form for lambda_alpha: (1/2) Gamma(n+1) Gamma(alpha+1) / Gamma(n+alpha+2),
/// evaluated through lgamma so it stays finite for n up to 1e6.
double moment_closed_lambda_alpha(int n, double alpha);

/// Bergman coefficient 1/(2 pi I_n); a_n for lambda_alpha, b_n otherwise.
double bergman_coeff(const WeightSpec& w, int n,
                     Precision precision = Precision::Double);

/// Write-once table of I_0..I_{n_max} sharing one rule pair (Q, Q+8) with
/// Q taken from the policy at n_max, so every entry meets its per-n bound.
class MomentTable {
public:
    static MomentTable compute(const WeightSpec& w, int n_max,
                               Precision precision = Precision::Double);

    const WeightSpec& weight() const { return weight_; }
    int n_max() const { return n_max_; }
    double value(int n) const;
    double error(int n) const;
    int order(int n) const;

    /// {"weight": ..., "n_max": ..., "entries": [[n, I_n, err_n], ...]}
    /// with 17-significant-digit decimal values.
    std::string to_json() const;

private:
    WeightSpec weight_;
    int n_max_ = 0;
    int order_ = 0;
    std::vector<double> values_;
    std::vector<double> errors_;

    explicit MomentTable(WeightSpec w) : weight_(std::move(w)) {}
};

} // namespace bergman
