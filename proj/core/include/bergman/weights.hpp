#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bergman {

/// Registry of admissible smooth factors M in the radial weight
/// mu(r) = M(r) * (1 - r^2)^alpha. Every form is C^2 on [0,1], strictly
/// positive, and satisfies M(1) = 1, so derivatives and the stabilized
/// quotient g = (1 - M)/(1 - r^2) are available in closed form.
enum class MForm {
    One,    ///< M(r) = 1 (the pure Jacobi weight lambda_alpha)
    PolyR2, ///< M(r) = sum_k c_k r^{2k}, with sum_k c_k = 1
    ExpR2,  ///< M(r) = exp(a (r^2 - 1))
};

/// A validated radial weight. Immutable after parse; evaluations are pure.
/// Default-constructs to lambda_0 (alpha = 0, M = 1).
class WeightSpec {
public:
    WeightSpec() : label_("alpha=0;M=one") {}

    /// Parses the exact grammar
    ///   alpha=<decimal>;M=one
    ///   alpha=<decimal>;M=poly-r2:<c0>,<c1>,...
    ///   alpha=<decimal>;M=exp-r2:<a>
    /// Whitespace is forbidden. Rejects alpha <= -1, poly coefficient sums
    /// away from 1 (tolerance 1e-12), and any M that fails strict positivity
    /// on a 1001-point grid over [0,1].
    static WeightSpec parse(std::string_view text);

    /// Convenience constructor for lambda_alpha = (1-r^2)^alpha.
    static WeightSpec lambda_alpha(double alpha);

    double alpha() const { return alpha_; }
    MForm form() const { return form_; }
    const std::string& label() const { return label_; }
    bool is_lambda_alpha() const { return form_ == MForm::One; }

    /// Degree of M as a polynomial in r^2; -1 for the entire exp form.
    int poly_degree() const;

    // Evaluations in the radial variable r in [0,1].
    double m(double r) const { return m_u(r * r); }
    double m_prime(double r) const { return r * m_prime_over_r_u(r * r); }
    double m_second(double r) const { return m_second_u(r * r); }

    /// g(r) = (1 - M(r)) / (1 - r^2) with the removable singularity at r = 1
    /// evaluated exactly (polynomial division for poly-r2, expm1 for exp-r2).
    double g(double r) const { return g_u(r * r); }

    // The same quantities as functions of u = r^2; these are the smooth
    // factors fed to Gauss-Jacobi rules, which absorb (1-u)^alpha.
    double m_u(double u) const;
    double m_prime_over_r_u(double u) const; ///< M'(r)/r at u = r^2 (even, smooth)
    double m_second_u(double u) const;       ///< M''(r) at u = r^2
    double g_u(double u) const;

    /// min/max of M over the positivity validation grid.
    double min_m() const { return min_m_; }
    double max_m() const { return max_m_; }

    /// Exact per-form value of M'(1), used by the limit formulas.
    double m_prime_at_one() const { return m_prime(1.0); }

    const std::vector<double>& poly_coeffs() const { return coeffs_; }
    double exp_parameter() const { return exp_a_; }

private:
    void validate();

    double alpha_ = 0.0;
    MForm form_ = MForm::One;
    std::vector<double> coeffs_; // poly-r2 coefficients c_0..c_d
    double exp_a_ = 0.0;         // exp-r2 parameter
    std::string label_;
    double min_m_ = 1.0;
    double max_m_ = 1.0;
};

} // namespace bergman
