#include "bergman/quadrature.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// Symmetric tridiagonal QL with implicit shifts. d: diagonal, e: subdiagonal
// (length n, e[n-1] is scratch), z: vector the eigenvector rotations are
// applied to. On return d holds the eigenvalues and z the rotated vector,
// both sorted by eigenvalue.
void tridiag_ql(int n, double* d, double* e, double* z) {
    if (n == 1) return;
    const double prec = std::numeric_limits<double>::epsilon();
    const int max_iter = 30;
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            while (m < n - 1 &&
                   std::abs(e[m]) > prec * (std::abs(d[m]) + std::abs(d[m + 1]))) {
                ++m;
            }
            if (m == l) break;
            if (++iter > max_iter) {
                throw QuadratureError("gauss_jacobi_rule: QL iteration failed to converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                if (std::abs(g) <= std::abs(f)) {
                    c = g / f;
                    r = std::hypot(c, 1.0);
                    e[i + 1] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = std::hypot(s, 1.0);
                    e[i + 1] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // insertion sort ascending, carrying z
    for (int i = 1; i < n; ++i) {
        double dv = d[i];
        double zv = z[i];
        int j = i - 1;
        while (j >= 0 && d[j] > dv) {
            d[j + 1] = d[j];
            z[j + 1] = z[j];
            --j;
        }
        d[j + 1] = dv;
        z[j + 1] = zv;
    }
}

} // namespace

QuadratureRule gauss_jacobi_rule(int order, double alpha) {
    if (order < 1) {
        throw QuadratureError("gauss_jacobi_rule: order must be >= 1");
    }
    if (!(alpha > -1.0)) {
        throw QuadratureError("gauss_jacobi_rule: alpha must be > -1");
    }

    // Monic Jacobi(alpha, 0) recurrence shifted from (-1,1) to (0,1):
    // diag[k] = (1 + a_k)/2, offdiag^2[k] = b_k/4.
    std::vector<double> d(order);
    std::vector<double> e(order, 0.0);
    d[0] = 1.0 / (alpha + 2.0);
    for (int k = 1; k < order; ++k) {
        double kk = static_cast<double>(k);
        double den = (2.0 * kk + alpha) * (2.0 * kk + alpha + 2.0);
        d[k] = 0.5 * (1.0 - alpha * alpha / den);
        double num = kk * kk * (kk + alpha) * (kk + alpha);
        double bden = (2.0 * kk + alpha) * (2.0 * kk + alpha) *
                      (2.0 * kk + alpha + 1.0) * (2.0 * kk + alpha - 1.0);
        e[k - 1] = std::sqrt(num / bden);
    }

    const double mass = 1.0 / (alpha + 1.0); // int_0^1 (1-u)^alpha du
    std::vector<double> z(order, 0.0);
    z[0] = std::sqrt(mass);

    tridiag_ql(order, d.data(), e.data(), z.data());

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.nodes = std::move(d);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.weights[i] = z[i] * z[i];
        if (!(rule.nodes[i] > 0.0 && rule.nodes[i] < 1.0)) {
            throw QuadratureError("gauss_jacobi_rule: node outside (0,1) at order " +
                                  std::to_string(order));
        }
        if (!(rule.weights[i] > 0.0)) {
            throw QuadratureError("gauss_jacobi_rule: nonpositive weight at order " +
                                  std::to_string(order));
        }
    }
    return rule;
}

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(int order, double alpha) {
    using Key = std::pair<int, std::uint64_t>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;

    Key key{order, std::bit_cast<std::uint64_t>(alpha)};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(order, alpha));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(rule)).first->second;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f,
                 Precision precision) {
    if (precision == Precision::Extended) {
        DDouble acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += DDouble::product(rule.weights[i], f(rule.nodes[i]));
        }
        return acc.result();
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(rule.nodes[i]);
    }
    return acc.result();
}

double weighted_sum(const QuadratureRule& rule, const std::vector<double>& values,
                    Precision precision) {
    if (values.size() != rule.nodes.size()) {
        throw DomainError("weighted_sum: value count does not match rule order");
    }
    if (precision == Precision::Extended) {
        DDouble acc;
        for (std::size_t i = 0; i < values.size(); ++i) {
            acc += DDouble::product(rule.weights[i], values[i]);
        }
        return acc.result();
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += rule.weights[i] * values[i];
    }
    return acc.result();
}

} // namespace bergman
