#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/moments.hpp"

using namespace bergman;

namespace {

std::shared_ptr<const PolarGrid> make_grid(const char* spec, int r, int k) {
    return std::make_shared<const PolarGrid>(WeightSpec::parse(spec), r, k);
}

std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<std::complex<double>> out(n);
    for (int m = 0; m < n; ++m) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += a[k] * std::polar(1.0, -2.0 * std::numbers::pi * m * k / n);
        }
        out[m] = acc;
    }
    return out;
}

} // namespace

TEST_CASE("grid construction validates its shape") {
    CHECK_THROWS_AS(PolarGrid(WeightSpec::lambda_alpha(0.0), 16, 12), DomainError);
    CHECK_THROWS_AS(PolarGrid(WeightSpec::lambda_alpha(0.0), 16, 2), DomainError);
    CHECK_THROWS_AS(PolarGrid(WeightSpec::lambda_alpha(0.0), 0, 16), DomainError);

    PolarGrid g(WeightSpec::lambda_alpha(0.5), 32, 64);
    for (int j = 0; j < 32; ++j) {
        CHECK(g.radius(j) > 0.0);
        CHECK(g.radius(j) < 1.0);
        if (j > 0) CHECK(g.radius(j) > g.radius(j - 1));
        CHECK(g.radial_weight(j) > 0.0);
    }
    CHECK(g.theta(0) == 0.0);
    CHECK(g.theta(16) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("radial rule reproduces the disc moments of |z|^2n") {
    for (double alpha : {0.0, 1.0}) {
        PolarGrid g(WeightSpec::lambda_alpha(alpha), 32, 16);
        for (int n = 0; n < 32; ++n) {
            double acc = 0.0;
            for (int j = 0; j < g.radial_count(); ++j) {
                acc += g.radial_weight(j) * std::pow(g.radius(j), 2 * n);
            }
            double quad = 2.0 * std::numbers::pi * 0.5 * acc;
            double exact = 2.0 * std::numbers::pi * moment_closed_lambda_alpha(n, alpha);
            CHECK(quad == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("fft matches the naive transform") {
    std::mt19937_64 rng(42);
    for (int n : {4, 16, 64}) {
        std::vector<std::complex<double>> data(n);
        for (auto& v : data) {
            v = {static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                 static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5};
        }
        auto expected = naive_dft(data);
        auto actual = data;
        fft_forward(actual.data(), n);
        for (int m = 0; m < n; ++m) {
            CHECK(std::abs(actual[m] - expected[m]) <= 5e-13);
        }
    }
    std::vector<std::complex<double>> bad(6);
    CHECK_THROWS_AS(fft_forward(bad.data(), 6), DomainError);
}

TEST_CASE("angular modes of registry samples") {
    auto grid = make_grid("alpha=0;M=one", 16, 32);

    auto f = angular_modes(sample("holo-poly:0,1", grid)); // f = w
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(f.mode(j, 1) - grid->radius(j)) <= 1e-14);
        for (int m = -16; m < 16; ++m) {
            if (m == 1) continue;
            CHECK(std::abs(f.mode(j, m)) <= 1e-14);
        }
    }

    auto g = angular_modes(sample("mono:1,0", grid)); // |w|^2
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(g.mode(j, 0) - grid->radius(j) * grid->radius(j)) <= 1e-14);
        CHECK(std::abs(g.mode(j, 3)) <= 1e-14);
    }

    auto h = angular_modes(sample("mono:0,-1", grid)); // conj(w) lives in mode -1
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(h.mode(j, -1) - grid->radius(j)) <= 1e-14);
        CHECK(std::abs(h.mode(j, 0)) <= 1e-14);
    }
}

TEST_CASE("geometric series modes with the aliasing bound") {
    auto grid = make_grid("alpha=0;M=one", 16, 256);
    auto f = angular_modes(sample("sing:1", grid)); // sum w^n -> modes r^m
    for (int j = 0; j < 16; ++j) {
        double r = grid->radius(j);
        double bound = std::pow(r, 128) / (1.0 - r);
        for (int m = 0; m < 16; ++m) {
            double gap = std::abs(f.mode(j, m) - std::pow(r, m));
            CHECK(gap <= bound + 1e-13);
            if (r <= 0.9) CHECK(gap <= 1e-10);
        }
    }
    CHECK(aliasing_bound(*grid) ==
          doctest::Approx(std::pow(grid->max_radius(), 128) / (1.0 - grid->max_radius())));
}

TEST_CASE("Parseval per radius") {
    auto grid = make_grid("alpha=0.5;M=exp-r2:1", 24, 128);
    auto f = angular_modes(sample("sing:0.4", grid));
    int k_count = grid->angular_count();
    for (int j = 0; j < 24; ++j) {
        double lhs = 0.0;
        for (int k = 0; k < k_count; ++k) lhs += std::norm(f.sample(j, k));
        lhs /= k_count;
        double rhs = 0.0;
        for (int m = 0; m < k_count; ++m) {
            rhs += std::norm(f.mode(j, m - k_count / 2));
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("csv export shape") {
    auto grid = make_grid("alpha=0;M=one", 8, 4);
    auto f = sample("holo-poly:1", grid);
    auto csv = f.to_csv();
    CHECK(csv.rfind("r,theta,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 8 * 4);
    CHECK(csv.back() == '\n');
}

TEST_CASE("mode access requires computed modes") {
    auto grid = make_grid("alpha=0;M=one", 8, 8);
    auto f = sample("holo-poly:1", grid);
    CHECK(!f.has_modes());
    CHECK_THROWS_AS(f.mode(0, 0), DomainError);
    auto g = angular_modes(f);
    CHECK(g.has_modes());
    CHECK(std::abs(g.mode(0, 0) - 1.0) <= 1e-14);
}
