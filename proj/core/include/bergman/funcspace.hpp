#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bergman/grid.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Finite Taylor coefficient sequence f_0..f_N of a holomorphic polynomial
/// or truncated series.
struct TaylorCoeffs {
    std::vector<std::complex<double>> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::complex<double> eval(std::complex<double> z) const;
    std::string to_json() const; ///< [[re,im],...], 17 significant digits
};

/// Parsed form of a test-function spec:
///   holo-poly:a0,a1,...   sum a_n z^n (real coefficients)
///   mono:k,m              |w|^{2k} w^m  (m < 0 means conj(w)^{|m|})
///   sing:s                (1-w)^{-s}, principal branch
///   logsing               log(1/(1-w))
struct FnSpec {
    enum class Kind { HoloPoly, Mono, Sing, LogSing };
    Kind kind = Kind::HoloPoly;
    std::vector<double> poly;
    int mono_k = 0;
    int mono_m = 0;
    double sing_s = 0.0;
    std::string text;

    static FnSpec parse(std::string_view spec);
    bool is_holomorphic() const {
        return kind != Kind::Mono || (mono_k == 0 && mono_m >= 0);
    }
};

/// Exact samples of the registry function at the grid points.
/// Throws ParseError on an unknown tag and DomainError if samples overflow.
GridFunction sample(std::string_view fn_spec, std::shared_ptr<const PolarGrid> grid);
GridFunction sample(const FnSpec& fn, std::shared_ptr<const PolarGrid> grid);

/// Analytic Taylor coefficients of a holomorphic registry function, truncated
/// at `degree` (holo-poly: as written; sing: binomial series; logsing: 1/n).
/// Throws DomainError for mono specs (not a Taylor series in z alone).
TaylorCoeffs taylor_coeffs_of(const FnSpec& fn, int degree);

/// Weighted p-norm on the grid:
/// ( sum_{j,k} |f|^p M(r_j) omega_j (2 pi / K) / 2 )^{1/p}, p in (1, inf).
double lp_norm(const GridFunction& f, double p, const WeightSpec& w);

/// Integral p-mean over the circle of radius r_j:
/// ((1/K) sum_k |f(r_j e^{i theta_k})|^p)^{1/p}.
double p_mean(const GridFunction& f, int j, double p);

/// Truncation S_N: coefficients unchanged below the cut.
TaylorCoeffs partial_sum(const TaylorCoeffs& f, int n);

/// Horner evaluation of the polynomial at every grid point.
GridFunction eval_taylor(const TaylorCoeffs& f, std::shared_ptr<const PolarGrid> grid);

/// Geometric aliasing majorant r_max^{K/2} / (1 - r_max) for mode recovery of
/// registry functions with unbounded Taylor series on this grid.
double aliasing_bound(const PolarGrid& grid);

} // namespace bergman
