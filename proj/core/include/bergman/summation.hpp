#pragma once

#include <cmath>

namespace bergman {

/// Arithmetic mode for quadrature accumulation. Extended switches the inner
/// sums to twofold-double (double-double) arithmetic; intended for very large
/// moment indices where raw terms span many orders of magnitude.
enum class Precision { Double, Extended };

namespace eft {

// Error-free transformations ("ACCURATE SUM AND DOT PRODUCT", Ogita/Rump/Oishi).
inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double fast_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = (a - s) + b;
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

} // namespace eft

/// Compensated accumulator: carries the running rounding error of += and
/// reintroduces it, keeping long positive sums accurate to ~1 ulp.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double v) : total_(v) {}

    CompensatedSum& operator+=(double v) {
        double e1;
        double t = eft::two_sum(total_, v, e1);
        total_ = eft::fast_two_sum(t, err_ + e1, err_);
        return *this;
    }

    double result() const { return total_ + err_; }

private:
    double total_ = 0.0;
    double err_ = 0.0;
};

/// Unevaluated double-double value hi + lo with |lo| <= ulp(hi)/2.
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    static DDouble product(double a, double b) {
        DDouble r;
        r.hi = eft::two_prod(a, b, r.lo);
        return r;
    }

    DDouble& operator+=(const DDouble& o) {
        double e1;
        double s = eft::two_sum(hi, o.hi, e1);
        double low = lo + o.lo + e1;
        hi = eft::fast_two_sum(s, low, lo);
        return *this;
    }

    DDouble& operator+=(double v) {
        double e1;
        double s = eft::two_sum(hi, v, e1);
        double low = lo + e1;
        hi = eft::fast_two_sum(s, low, lo);
        return *this;
    }

    double result() const { return hi + lo; }
};

} // namespace bergman
