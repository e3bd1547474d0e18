#include "bergman/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bergman/errors.hpp"
#include "bergman/io.hpp"

namespace bergman {

int moment_order_policy(const WeightSpec& w, int n) {
    int d = w.poly_degree();
    if (d >= 0) {
        // exact for u^n * M(sqrt u) of degree n + d
        return (n + d + 1 + 1) / 2 + 2;
    }
    return std::max(64, (n + 1) / 2 + 16);
}

namespace {

double moment_with_rule(const WeightSpec& w, int n, const QuadratureRule& rule,
                        Precision precision) {
    return 0.5 * integrate(
                     rule,
                     [&](double u) { return std::pow(u, n) * w.m_u(u); },
                     precision);
}

} // namespace

std::pair<double, double> moment(const WeightSpec& w, int n, Precision precision) {
    if (n < 0) throw DomainError("moment: n must be >= 0");
    int q = moment_order_policy(w, n);
    auto rule = cached_gauss_jacobi_rule(q, w.alpha());
    auto check = cached_gauss_jacobi_rule(q + 8, w.alpha());
    double value = moment_with_rule(w, n, *rule, precision);
    double other = moment_with_rule(w, n, *check, precision);
    return {value, std::abs(value - other)};
}

double moment_closed_lambda_alpha(int n, double alpha) {
    if (n < 0) throw DomainError("moment_closed_lambda_alpha: n must be >= 0");
    if (!(alpha > -1.0)) throw DomainError("moment_closed_lambda_alpha: alpha must be > -1");
    double ln = std::lgamma(n + 1.0) + std::lgamma(alpha + 1.0) - std::lgamma(n + alpha + 2.0);
    return 0.5 * std::exp(ln);
}

double bergman_coeff(const WeightSpec& w, int n, Precision precision) {
    auto [value, err] = moment(w, n, precision);
    (void)err;
    return 1.0 / (2.0 * std::numbers::pi * value);
}

MomentTable MomentTable::compute(const WeightSpec& w, int n_max, Precision precision) {
    if (n_max < 0) throw DomainError("MomentTable: n_max must be >= 0");
    MomentTable table(w);
    table.n_max_ = n_max;
    table.order_ = moment_order_policy(w, n_max);
    auto rule = cached_gauss_jacobi_rule(table.order_, w.alpha());
    auto check = cached_gauss_jacobi_rule(table.order_ + 8, w.alpha());

    table.values_.resize(n_max + 1);
    table.errors_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        double v = moment_with_rule(w, n, *rule, precision);
        double o = moment_with_rule(w, n, *check, precision);
        table.values_[n] = v;
        table.errors_[n] = std::abs(v - o);
        if (!(v > 0.0)) {
            throw CheckError("MomentTable: nonpositive moment at n=" + std::to_string(n));
        }
        if (n > 0 && !(table.values_[n] < table.values_[n - 1])) {
            throw CheckError("MomentTable: monotonicity I_{n+1} < I_n violated at n=" +
                             std::to_string(n));
        }
    }
    return table;
}

double MomentTable::value(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("MomentTable::value: n out of range");
    return values_[n];
}

double MomentTable::error(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("MomentTable::error: n out of range");
    return errors_[n];
}

int MomentTable::order(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("MomentTable::order: n out of range");
    return order_;
}

std::string MomentTable::to_json() const {
    std::string out = "{\"weight\":\"" + io::json_escape(weight_.label()) + "\",";
    out += "\"n_max\":" + std::to_string(n_max_) + ",\"entries\":[";
    for (int n = 0; n <= n_max_; ++n) {
        if (n > 0) out += ',';
        out += '[' + std::to_string(n) + ',' + io::fmt_double(values_[n]) + ',' +
               io::fmt_double(errors_[n]) + ']';
    }
    out += "]}";
    return out;
}

} // namespace bergman
