#include <doctest.h>

#include <cmath>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/summation.hpp"

using namespace bergman;

namespace {

// Beta-function oracle: int_0^1 u^j (1-u)^alpha du
double beta_moment(int j, double alpha) {
    return std::exp(std::lgamma(j + 1.0) + std::lgamma(alpha + 1.0) -
                    std::lgamma(j + alpha + 2.0));
}

} // namespace

TEST_CASE("one-point rules match the centroids") {
    auto mid = gauss_jacobi_rule(1, 0.0);
    CHECK(mid.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mid.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    auto jac = gauss_jacobi_rule(1, 2.0);
    CHECK(jac.nodes[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(jac.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("degree 2*order-1 exactness") {
    auto rule = gauss_jacobi_rule(8, 0.0);
    double v = integrate(rule, [](double u) { return std::pow(u, 15); });
    CHECK(v == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("invalid parameters are reported") {
    CHECK_THROWS_AS(gauss_jacobi_rule(0, 0.0), QuadratureError);
    CHECK_THROWS_AS(gauss_jacobi_rule(-3, 0.0), QuadratureError);
    CHECK_THROWS_AS(gauss_jacobi_rule(4, -1.0), QuadratureError);
    CHECK_THROWS_AS(gauss_jacobi_rule(4, -1.5), QuadratureError);
}

TEST_CASE("nodes interior and ascending, weights positive, mass 1/(alpha+1)") {
    for (double alpha : {-0.9, -0.5, 0.0, 0.37, 1.0, 2.5, 7.0}) {
        for (int order : {1, 2, 3, 5, 8, 16, 64, 129}) {
            auto rule = gauss_jacobi_rule(order, alpha);
            double mass = 0.0;
            for (int i = 0; i < order; ++i) {
                CHECK(rule.nodes[i] > 0.0);
                CHECK(rule.nodes[i] < 1.0);
                if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                CHECK(rule.weights[i] > 0.0);
                mass += rule.weights[i];
            }
            CHECK(mass == doctest::Approx(1.0 / (alpha + 1.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("monomials integrate to Beta values") {
    for (double alpha : {-0.5, 0.0, 0.37, 1.0, 2.5}) {
        auto rule = gauss_jacobi_rule(16, alpha);
        for (int j = 0; j <= 31; ++j) {
            double v = integrate(rule, [j](double u) { return std::pow(u, j); });
            CHECK(v == doctest::Approx(beta_moment(j, alpha)).epsilon(5e-13));
        }
    }
}

TEST_CASE("rule cache returns shared instances") {
    auto a = cached_gauss_jacobi_rule(32, 0.5);
    auto b = cached_gauss_jacobi_rule(32, 0.5);
    CHECK(a.get() == b.get());
    auto c = cached_gauss_jacobi_rule(32, 0.25);
    CHECK(a.get() != c.get());
}

TEST_CASE("compensated summation recovers cancelled tails") {
    CompensatedSum s;
    s += 1e100;
    s += 1.0;
    s += -1e100;
    CHECK(s.result() == 1.0);

    CompensatedSum tiny;
    tiny += 1.0;
    for (int i = 0; i < 10; ++i) tiny += 1e-16;
    CHECK(tiny.result() == doctest::Approx(1.0 + 1e-15).epsilon(1e-16));
}

TEST_CASE("double-double accumulation is exact on representable splits") {
    DDouble dd;
    dd += 1e16;
    dd += 1.0;
    dd += -1e16;
    CHECK(dd.result() == 1.0);

    // two_prod captures the exact low part of a product
    DDouble p = DDouble::product(1.0 + std::ldexp(1.0, -30), 1.0 - std::ldexp(1.0, -30));
    CHECK(p.hi == 1.0);
    CHECK(p.lo == -std::ldexp(1.0, -60));
}

TEST_CASE("extended precision mode agrees with double mode on smooth sums") {
    auto rule = gauss_jacobi_rule(64, 0.5);
    auto f = [](double u) { return std::exp(u - 1.0) * u * u; };
    double d = integrate(rule, f, Precision::Double);
    double x = integrate(rule, f, Precision::Extended);
    CHECK(d == doctest::Approx(x).epsilon(1e-15));
}

TEST_CASE("weighted_sum validates its input length") {
    auto rule = gauss_jacobi_rule(4, 0.0);
    std::vector<double> wrong(3, 1.0);
    CHECK_THROWS_AS(weighted_sum(rule, wrong), DomainError);
    std::vector<double> ones(4, 1.0);
    CHECK(weighted_sum(rule, ones) == doctest::Approx(1.0).epsilon(1e-14));
}
