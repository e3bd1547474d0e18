#pragma once

#include <complex>
#include <vector>

#include "bergman/moments.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Truncated Bergman kernel series B(z,w) = sum_{n<=N} c_n (z conj(w))^n
/// with c_n the Bergman coefficients of the weight.
class KernelSeries {
public:
    static KernelSeries build(const WeightSpec& w, int truncation,
                              Precision precision = Precision::Double);

    const WeightSpec& weight() const { return weight_; }
    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Horner evaluation in zeta = z * conj(w). Requires |z| < 1 and |w| < 1.
    std::complex<double> eval(std::complex<double> z, std::complex<double> w) const;

private:
    WeightSpec weight_;
    std::vector<double> coeffs_;

    explicit KernelSeries(WeightSpec w) : weight_(std::move(w)) {}
};

/// Least N such that the coefficient-majorant tail
///   sum_{n>N} C (n+1)^{alpha+1} rho^n,  C = (alpha+1) max(1, 2^alpha) / pi,
/// is provably below tol (term threshold tol*(1-rho)/2 together with a
/// geometric ratio check). Throws on rho >= 1 or when N would exceed 1e6.
int truncation_degree(double alpha, double rho, double tol);

/// Closed form c_alpha / (1 - z conj(w))^{2+alpha} with c_alpha = (alpha+1)/pi,
/// principal branch. Requires |z||w| < 1.
std::complex<double> eval_kernel_closed(double alpha, std::complex<double> z,
                                        std::complex<double> w);

} // namespace bergman
