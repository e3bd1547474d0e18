#include "bergman/kernel.hpp"

#include <cmath>
#include <numbers>

#include "bergman/errors.hpp"

namespace bergman {

KernelSeries KernelSeries::build(const WeightSpec& w, int truncation, Precision precision) {
    if (truncation < 0) throw DomainError("KernelSeries: truncation must be >= 0");
    KernelSeries k(w);
    MomentTable moments = MomentTable::compute(w, truncation, precision);
    k.coeffs_.resize(truncation + 1);
    for (int n = 0; n <= truncation; ++n) {
        k.coeffs_[n] = 1.0 / (2.0 * std::numbers::pi * moments.value(n));
    }
    return k;
}

std::complex<double> KernelSeries::eval(std::complex<double> z, std::complex<double> w) const {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
        throw DomainError("KernelSeries::eval: arguments must lie in the open disc");
    }
    std::complex<double> zeta = z * std::conj(w);
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * zeta + *it;
    }
    return acc;
}

int truncation_degree(double alpha, double rho, double tol) {
    if (rho >= 1.0) throw DomainError("truncation_degree: rho must be < 1");
    if (!(tol > 0.0)) throw DomainError("truncation_degree: tol must be positive");
    if (rho <= 0.0) return 0;

    constexpr int kCap = 1000000;
    const double c = (alpha + 1.0) * std::max(1.0, std::pow(2.0, alpha)) / std::numbers::pi;
    const double term_bound = tol * (1.0 - rho) / 2.0;
    const double ratio_bound = (1.0 + rho) / 2.0;

    // Majorant a_n <= C (n+1)^{alpha+1}. Stop at the first N whose next term
    // is below tol (1-rho)/2 while the term ratio is already <= (1+rho)/2;
    // then tail(N) <= 2 m_{N+1} / (1-rho) <= tol.
    for (int n = 0; n <= kCap; ++n) {
        double next_term =
            c * std::pow(n + 2.0, alpha + 1.0) * std::pow(rho, n + 1.0);
        double ratio = rho * std::pow((n + 3.0) / (n + 2.0), alpha + 1.0);
        if (next_term <= term_bound && ratio <= ratio_bound) return n;
    }
    throw DomainError("truncation_degree: cap of 1e6 exceeded");
}

std::complex<double> eval_kernel_closed(double alpha, std::complex<double> z,
                                        std::complex<double> w) {
    std::complex<double> zeta = z * std::conj(w);
    if (!(std::abs(zeta) < 1.0)) {
        throw DomainError("eval_kernel_closed: |z||w| must be < 1");
    }
    double c_alpha = (alpha + 1.0) / std::numbers::pi;
    // Re(1 - zeta) > 0, so the principal branch is smooth here.
    return c_alpha * std::pow(1.0 - zeta, -(2.0 + alpha));
}

} // namespace bergman
