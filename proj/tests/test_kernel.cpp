#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bergman/errors.hpp"
#include "bergman/kernel.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

TEST_CASE("truncation degree behaves like a tail bound") {
    int n = truncation_degree(0.0, 0.49, 1e-8);
    CHECK(n <= 80);
    CHECK(n >= 5);

    CHECK(truncation_degree(0.0, 1e-9, 1e-3) <= 1);

    int big = truncation_degree(0.0, 0.999, 1e-8);
    CHECK(big <= 1000000);
    CHECK(big > 1000);

    int prev = 0;
    for (double rho : {0.3, 0.6, 0.9, 0.99}) {
        int cur = truncation_degree(0.0, rho, 1e-8);
        CHECK(cur >= prev);
        prev = cur;
    }

    CHECK_THROWS_AS(truncation_degree(0.0, 1.0, 1e-8), DomainError);
    CHECK_THROWS_AS(truncation_degree(0.0, 1.5, 1e-8), DomainError);
    CHECK_THROWS_AS(truncation_degree(0.0, 0.9999995, 1e-300), DomainError); // cap
}

TEST_CASE("closed form worked values") {
    auto at_origin = eval_kernel_closed(0.0, 0.0, 0.0);
    CHECK(at_origin.real() == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(at_origin.imag() == 0.0);

    auto half = eval_kernel_closed(0.0, 0.5, 0.5);
    CHECK(half.real() == doctest::Approx(16.0 / (9.0 * std::numbers::pi)).epsilon(1e-14));

    std::complex<double> zi(0.0, 0.6);
    auto imag_pair = eval_kernel_closed(1.0, zi, zi); // z conj(w) = 0.36, real
    CHECK(imag_pair.real() ==
          doctest::Approx((2.0 / std::numbers::pi) / std::pow(0.64, 3)).epsilon(1e-13));
    CHECK(std::abs(imag_pair.imag()) <= 1e-15);

    CHECK_THROWS_AS(eval_kernel_closed(0.0, 2.0, 0.5), DomainError);
}

TEST_CASE("series worked values") {
    auto lam0 = KernelSeries::build(WeightSpec::lambda_alpha(0.0), 16);
    auto v = lam0.eval(0.0, 0.0);
    CHECK(v.real() == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));

    auto lam1 = KernelSeries::build(WeightSpec::lambda_alpha(1.0), 16);
    auto c = lam1.eval(0.5, 0.0); // only n = 0 survives
    CHECK(c.real() == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-14));

    // w = 0 makes the value independent of z
    auto a = lam1.eval(std::complex<double>(0.3, 0.4), 0.0);
    auto b = lam1.eval(std::complex<double>(-0.9, 0.0), 0.0);
    CHECK(a == b);

    CHECK_THROWS_AS(lam0.eval(1.5, 0.0), DomainError);
}

TEST_CASE("Hermitian symmetry holds exactly for the finite sum") {
    auto k = KernelSeries::build(WeightSpec::parse("alpha=0.5;M=exp-r2:1"), 24);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> z = std::polar(0.8 * uniform01(rng),
                                            2.0 * std::numbers::pi * uniform01(rng));
        std::complex<double> w = std::polar(0.8 * uniform01(rng),
                                            2.0 * std::numbers::pi * uniform01(rng));
        CHECK(k.eval(z, w) == std::conj(k.eval(w, z)));
    }
}

TEST_CASE("diagonal values are real and at least the constant term") {
    auto k = KernelSeries::build(WeightSpec::lambda_alpha(0.5), 32);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> z = std::polar(0.9 * uniform01(rng),
                                            2.0 * std::numbers::pi * uniform01(rng));
        auto v = k.eval(z, z);
        CHECK(std::abs(v.imag()) <= 1e-14 * v.real());
        CHECK(v.real() >= k.coeffs()[0]);
    }
}

TEST_CASE("coefficient ratio approaches 1 from above") {
    for (double alpha : {0.0, 0.5, 2.5}) {
        auto k = KernelSeries::build(WeightSpec::lambda_alpha(alpha), 64);
        for (int n = 4; n <= 64; ++n) {
            double ratio = k.coeffs()[n] / k.coeffs()[n - 1];
            CHECK(ratio > 1.0);
            CHECK(ratio <= 1.0 + (alpha + 2.0) / n);
        }
    }
}

TEST_CASE("coefficients obey the polynomial majorant") {
    for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
        double c = (alpha + 1.0) * std::max(1.0, std::pow(2.0, alpha)) / std::numbers::pi;
        auto k = KernelSeries::build(WeightSpec::lambda_alpha(alpha), 512);
        for (int n = 0; n <= 512; ++n) {
            CHECK(k.coeffs()[n] <= c * std::pow(n + 1.0, alpha + 1.0) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("series meets the closed form at the tail-bound truncation") {
    for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
        int trunc = truncation_degree(alpha, 0.49, 1e-10);
        auto series = KernelSeries::build(WeightSpec::lambda_alpha(alpha), trunc);
        std::mt19937_64 rng(1234);
        for (int i = 0; i < 100; ++i) {
            auto z = std::polar(0.7 * std::sqrt(uniform01(rng)),
                                2.0 * std::numbers::pi * uniform01(rng));
            auto w = std::polar(0.7 * std::sqrt(uniform01(rng)),
                                2.0 * std::numbers::pi * uniform01(rng));
            auto s = series.eval(z, w);
            auto c = eval_kernel_closed(alpha, z, w);
            CHECK(std::abs(s - c) <= 1e-8 * std::abs(c));
        }
    }
}

TEST_CASE("exp-weight kernel matches a high-precision series reference") {
    // 40-digit mpmath summation of 1/(2 pi I_n) zeta^n at zeta = 0.2
    auto k = KernelSeries::build(WeightSpec::parse("alpha=0.5;M=exp-r2:1"), 120);
    auto v = k.eval(0.5, 0.4);
    CHECK(v.real() == doctest::Approx(1.3550858085441838942).epsilon(1e-13));
    CHECK(v.imag() == 0.0);
}

TEST_CASE("general weight kernels keep positive coefficients") {
    auto k = KernelSeries::build(WeightSpec::parse("alpha=0;M=poly-r2:2,-1"), 48);
    for (double c : k.coeffs()) CHECK(c > 0.0);
    // b_0 = 2/(3 pi) for M = 2 - r^2
    CHECK(k.coeffs()[0] == doctest::Approx(2.0 / (3.0 * std::numbers::pi)).epsilon(1e-13));
}
