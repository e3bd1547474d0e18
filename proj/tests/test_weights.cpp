#include <doctest.h>

#include <cmath>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

std::vector<WeightSpec> registry() {
    return {
        WeightSpec::parse("alpha=0;M=one"),
        WeightSpec::parse("alpha=0;M=poly-r2:2,-1"),
        WeightSpec::parse("alpha=1;M=poly-r2:2,-1"),
        WeightSpec::parse("alpha=0.5;M=exp-r2:1"),
        WeightSpec::parse("alpha=-0.5;M=poly-r2:0.5,0.25,0.25"),
    };
}

} // namespace

TEST_CASE("parse accepts the registry grammar") {
    auto lebesgue = WeightSpec::parse("alpha=0;M=one");
    CHECK(lebesgue.alpha() == 0.0);
    CHECK(lebesgue.form() == MForm::One);
    CHECK(lebesgue.is_lambda_alpha());

    auto poly = WeightSpec::parse("alpha=0;M=poly-r2:2,-1");
    CHECK(poly.m(0.0) == 2.0);
    CHECK(poly.m(1.0) == 1.0);
    CHECK(poly.m(0.5) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(poly.poly_degree() == 1);

    auto exp_w = WeightSpec::parse("alpha=2.5e0;M=exp-r2:1.5");
    CHECK(exp_w.alpha() == 2.5);
    CHECK(exp_w.m(1.0) == 1.0);
    CHECK(exp_w.exp_parameter() == 1.5);
}

TEST_CASE("parse rejects malformed and invalid specs") {
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0.5;M=poly-r2:1,1"), DomainError); // M(1)=2
    CHECK_THROWS_AS(WeightSpec::parse("alpha=-1;M=one"), DomainError);
    CHECK_THROWS_AS(WeightSpec::parse("alpha=-2;M=one"), DomainError);
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0; M=one"), ParseError); // whitespace
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0"), ParseError);
    CHECK_THROWS_AS(WeightSpec::parse("alpha=x;M=one"), ParseError);
    CHECK_THROWS_AS(WeightSpec::parse("beta=0;M=one"), ParseError);
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0;M=cosine"), ParseError);
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0;M=poly-r2:"), ParseError);
    // M(0) = -1 < 0 although M(1) = 1
    CHECK_THROWS_AS(WeightSpec::parse("alpha=0;M=poly-r2:-1,2"), DomainError);
}

TEST_CASE("derivatives match hand differentiation") {
    auto poly = WeightSpec::parse("alpha=0;M=poly-r2:2,-1"); // M = 2 - r^2
    CHECK(poly.m(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(poly.m_prime(1.0) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(poly.m_second(1.0) == doctest::Approx(-2.0).epsilon(1e-15));

    auto one = WeightSpec::parse("alpha=0.5;M=one");
    for (double r : {0.0, 0.3, 1.0}) {
        CHECK(one.m(r) == 1.0);
        CHECK(one.m_prime(r) == 0.0);
        CHECK(one.m_second(r) == 0.0);
    }

    auto exp_w = WeightSpec::parse("alpha=0;M=exp-r2:1"); // M = e^{r^2-1}
    CHECK(exp_w.m(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(exp_w.m_prime(1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(exp_w.m_second(1.0) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("finite differences confirm m_prime and m_second") {
    const double h = 1e-5;
    for (const auto& w : registry()) {
        for (double r = 0.1; r < 0.95; r += 0.2) {
            double fd1 = (w.m(r + h) - w.m(r - h)) / (2.0 * h);
            CHECK(std::abs(fd1 - w.m_prime(r)) <= 1e-6);
            double fd2 = (w.m_prime(r + h) - w.m_prime(r - h)) / (2.0 * h);
            CHECK(std::abs(fd2 - w.m_second(r)) <= 1e-6);
        }
    }
}

TEST_CASE("g handles the removable singularity exactly") {
    auto one = WeightSpec::parse("alpha=0;M=one");
    for (double r : {0.0, 0.5, 1.0}) CHECK(one.g(r) == 0.0);

    auto poly = WeightSpec::parse("alpha=0;M=poly-r2:2,-1"); // 1 - M = r^2 - 1
    for (double r : {0.0, 0.3, 0.99, 1.0}) {
        CHECK(poly.g(r) == doctest::Approx(-1.0).epsilon(1e-15));
    }

    auto exp_w = WeightSpec::parse("alpha=0;M=exp-r2:1");
    CHECK(exp_w.g(1.0) == 1.0); // limit of (e^s - 1)/s
    CHECK(exp_w.g(0.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("g * (1 - r^2) + M = 1 across the registry") {
    for (const auto& w : registry()) {
        for (int i = 0; i < 200; ++i) {
            double r = i / 200.0;
            double lhs = w.g(r) * (1.0 - r * r) + w.m(r);
            CHECK(std::abs(lhs - 1.0) <= 1e-14);
        }
    }
}

TEST_CASE("positivity extrema are tracked") {
    auto poly = WeightSpec::parse("alpha=0;M=poly-r2:2,-1");
    CHECK(poly.min_m() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(poly.max_m() == doctest::Approx(2.0).epsilon(1e-12));
    for (const auto& w : registry()) CHECK(w.min_m() > 0.0);
}

TEST_CASE("label round-trips through parse") {
    const char* text = "alpha=0.5;M=exp-r2:1";
    auto w = WeightSpec::parse(text);
    CHECK(w.label() == text);
    auto again = WeightSpec::parse(w.label());
    CHECK(again.alpha() == w.alpha());
    CHECK(again.form() == w.form());
}
