#include "bergman/funcspace.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "bergman/errors.hpp"
#include "bergman/io.hpp"
#include "bergman/summation.hpp"

namespace bergman {

namespace {

double parse_real(std::string_view s, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw ParseError(std::string("fn spec: bad number for ") + what);
    }
    return value;
}

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(std::string("fn spec: bad integer for ") + what);
    }
    return value;
}

} // namespace

FnSpec FnSpec::parse(std::string_view spec) {
    FnSpec fn;
    fn.text = std::string(spec);
    if (spec == "logsing") {
        fn.kind = Kind::LogSing;
        return fn;
    }
    if (spec.starts_with("holo-poly:")) {
        fn.kind = Kind::HoloPoly;
        std::string_view rest = spec.substr(10);
        while (true) {
            auto comma = rest.find(',');
            fn.poly.push_back(parse_real(rest.substr(0, comma), "holo-poly coefficient"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return fn;
    }
    if (spec.starts_with("mono:")) {
        fn.kind = Kind::Mono;
        std::string_view rest = spec.substr(5);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError("fn spec: mono needs two integers k,m");
        }
        fn.mono_k = parse_int(rest.substr(0, comma), "mono k");
        fn.mono_m = parse_int(rest.substr(comma + 1), "mono m");
        if (fn.mono_k < 0) throw ParseError("fn spec: mono k must be >= 0");
        return fn;
    }
    if (spec.starts_with("sing:")) {
        fn.kind = Kind::Sing;
        fn.sing_s = parse_real(spec.substr(5), "sing exponent");
        return fn;
    }
    throw ParseError("fn spec: unknown tag '" + std::string(spec) + "'");
}

GridFunction sample(std::string_view fn_spec, std::shared_ptr<const PolarGrid> grid) {
    return sample(FnSpec::parse(fn_spec), std::move(grid));
}

GridFunction sample(const FnSpec& fn, std::shared_ptr<const PolarGrid> grid) {
    const PolarGrid& g = *grid;
    int r_count = g.radial_count();
    int k_count = g.angular_count();
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(r_count) * k_count);

    for (int j = 0; j < r_count; ++j) {
        auto* row = samples.data() + static_cast<std::size_t>(j) * k_count;
        switch (fn.kind) {
            case FnSpec::Kind::HoloPoly:
                for (int k = 0; k < k_count; ++k) {
                    std::complex<double> z = g.point(j, k);
                    std::complex<double> acc = 0.0;
                    for (auto it = fn.poly.rbegin(); it != fn.poly.rend(); ++it) {
                        acc = acc * z + *it;
                    }
                    row[k] = acc;
                }
                break;
            case FnSpec::Kind::Mono: {
                double power = 2.0 * fn.mono_k + std::abs(static_cast<double>(fn.mono_m));
                double rad = std::pow(g.radius(j), power);
                for (int k = 0; k < k_count; ++k) {
                    row[k] = rad * std::polar(1.0, fn.mono_m * g.theta(k));
                }
                break;
            }
            case FnSpec::Kind::Sing:
                for (int k = 0; k < k_count; ++k) {
                    row[k] = std::pow(1.0 - g.point(j, k), -fn.sing_s);
                }
                break;
            case FnSpec::Kind::LogSing:
                for (int k = 0; k < k_count; ++k) {
                    row[k] = -std::log(1.0 - g.point(j, k));
                }
                break;
        }
    }
    for (const auto& v : samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("sample: values overflow for '" + fn.text + "'");
        }
    }
    return GridFunction(std::move(grid), std::move(samples));
}

TaylorCoeffs taylor_coeffs_of(const FnSpec& fn, int degree) {
    if (degree < 0) throw DomainError("taylor_coeffs_of: degree must be >= 0");
    TaylorCoeffs tc;
    tc.c.assign(degree + 1, 0.0);
    switch (fn.kind) {
        case FnSpec::Kind::HoloPoly:
            for (std::size_t i = 0; i < fn.poly.size() && i <= static_cast<std::size_t>(degree); ++i) {
                tc.c[i] = fn.poly[i];
            }
            break;
        case FnSpec::Kind::Mono:
            if (!fn.is_holomorphic()) {
                throw DomainError("taylor_coeffs_of: '" + fn.text + "' is not holomorphic");
            }
            if (fn.mono_m <= degree) tc.c[fn.mono_m] = 1.0;
            break;
        case FnSpec::Kind::Sing: {
            // (1-w)^{-s} = sum binom(n+s-1, n) w^n
            double f = 1.0;
            tc.c[0] = 1.0;
            for (int n = 1; n <= degree; ++n) {
                f *= (fn.sing_s + n - 1.0) / n;
                tc.c[n] = f;
            }
            break;
        }
        case FnSpec::Kind::LogSing:
            for (int n = 1; n <= degree; ++n) tc.c[n] = 1.0 / n;
            break;
    }
    return tc;
}

std::complex<double> TaylorCoeffs::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::string TaylorCoeffs::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ',';
        out += io::fmt_complex_pair(c[i]);
    }
    out += ']';
    return out;
}

double lp_norm(const GridFunction& f, double p, const WeightSpec& w) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("lp_norm: p must lie in (1, inf)");
    }
    const PolarGrid& g = f.grid();
    int k_count = g.angular_count();
    double cell = 2.0 * std::numbers::pi / k_count * 0.5;
    CompensatedSum acc;
    for (int j = 0; j < g.radial_count(); ++j) {
        CompensatedSum ring;
        for (int k = 0; k < k_count; ++k) {
            double sq = std::norm(f.sample(j, k));
            if (!std::isfinite(sq)) throw DomainError("lp_norm: nonfinite sample");
            ring += std::pow(sq, 0.5 * p);
        }
        acc += ring.result() * w.m(g.radius(j)) * g.radial_weight(j) * cell;
    }
    return std::pow(acc.result(), 1.0 / p);
}

double p_mean(const GridFunction& f, int j, double p) {
    const PolarGrid& g = f.grid();
    if (j < 0 || j >= g.radial_count()) throw DomainError("p_mean: radial index out of range");
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("p_mean: p must be positive");
    int k_count = g.angular_count();
    CompensatedSum acc;
    for (int k = 0; k < k_count; ++k) {
        acc += std::pow(std::norm(f.sample(j, k)), 0.5 * p);
    }
    return std::pow(acc.result() / k_count, 1.0 / p);
}

TaylorCoeffs partial_sum(const TaylorCoeffs& f, int n) {
    if (n < 0) throw DomainError("partial_sum: N must be >= 0");
    TaylorCoeffs out = f;
    if (static_cast<std::size_t>(n) + 1 < out.c.size()) out.c.resize(n + 1);
    return out;
}

GridFunction eval_taylor(const TaylorCoeffs& f, std::shared_ptr<const PolarGrid> grid) {
    const PolarGrid& g = *grid;
    int r_count = g.radial_count();
    int k_count = g.angular_count();
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(r_count) * k_count);
    for (int j = 0; j < r_count; ++j) {
        auto* row = samples.data() + static_cast<std::size_t>(j) * k_count;
        for (int k = 0; k < k_count; ++k) {
            row[k] = f.eval(g.point(j, k));
        }
    }
    return GridFunction(std::move(grid), std::move(samples));
}

double aliasing_bound(const PolarGrid& grid) {
    double r = grid.max_radius();
    return std::pow(r, grid.angular_count() / 2) / (1.0 - r);
}

} // namespace bergman
