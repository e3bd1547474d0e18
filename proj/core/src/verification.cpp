#include "bergman/verification.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "bergman/analysis.hpp"
#include "bergman/errors.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/io.hpp"
#include "bergman/kernel.hpp"
#include "bergman/moments.hpp"
#include "bergman/projector.hpp"
#include "bergman/weights.hpp"

namespace bergman::verification {

namespace {

const char* kPolyWeight0 = "alpha=0;M=poly-r2:2,-1";
const char* kPolyWeight1 = "alpha=1;M=poly-r2:2,-1";
const char* kExpWeight = "alpha=0.5;M=exp-r2:1";

std::vector<WeightSpec> registry_weights() {
    return {WeightSpec::parse(kPolyWeight0), WeightSpec::parse(kPolyWeight1),
            WeightSpec::parse(kExpWeight)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::complex<double> inner_product(const GridFunction& u, const GridFunction& v,
                                   const WeightSpec& w) {
    const PolarGrid& g = u.grid();
    int k_count = g.angular_count();
    double cell = std::numbers::pi / k_count;
    CompensatedSum re, im;
    for (int j = 0; j < g.radial_count(); ++j) {
        double wj = w.m(g.radius(j)) * g.radial_weight(j) * cell;
        for (int k = 0; k < k_count; ++k) {
            auto t = u.sample(j, k) * std::conj(v.sample(j, k));
            re += t.real() * wj;
            im += t.imag() * wj;
        }
    }
    return {re.result(), im.result()};
}

CriterionResult criterion_closed_form_multipliers() {
    CriterionResult res{1, "closed-form multiplier sequence t_n = (n+2)/(n+3)", false, ""};
    constexpr int kNMax = 500;
    constexpr double kTol = 1e-10;
    WeightSpec mu = WeightSpec::parse(kPolyWeight0);
    MomentTable lam = MomentTable::compute(WeightSpec::lambda_alpha(0.0), kNMax);
    MomentTable m = MomentTable::compute(mu, kNMax);
    double worst = 0.0;
    for (int n = 0; n <= kNMax; ++n) {
        double t = lam.value(n) / m.value(n);
        double exact = (n + 2.0) / (n + 3.0);
        worst = std::max(worst, std::abs(t - exact) / exact);
    }
    res.pass = worst <= kTol;
    res.detail = "max rel err " + fmt(worst) + " over n<=500 (bound 1e-10)";
    return res;
}

CriterionResult criterion_delta_limits() {
    CriterionResult res{2, "ratio sequences reach 2(a+1)^2 M'(1) and 2(a+2)(a+1)M'(1)", false, ""};
    constexpr double kRelTol = 0.01;
    double worst = 0.0;
    for (const auto& mu : registry_weights()) {
        DeltaLimits lim = delta_limits(mu, mu.alpha());
        MultiplierDelta half = multiplier_delta(mu, 2500);
        MultiplierDelta full = multiplier_delta(mu, 5000);
        double r12 = richardson_dyadic(half.c1 * half.c2 / half.a, full.c1 * full.c2 / full.a);
        double r34 = richardson_dyadic(half.c3 * half.c4 / half.a, full.c3 * full.c4 / full.a);
        worst = std::max(worst, std::abs(r12 - lim.l12) / std::abs(lim.l12));
        worst = std::max(worst, std::abs(r34 - lim.l34) / std::abs(lim.l34));
    }
    res.pass = worst <= kRelTol;
    res.detail = "max rel gap " + fmt(worst) +
                 " at n=5000 after one Richardson step, three weights (bound 0.01)";
    return res;
}

CriterionResult criterion_scaled_difference() {
    CriterionResult res{3, "n^2 (t_n - t_{n-1}) approaches -(a+1)M'(1)/2", false, ""};
    constexpr int kN = 2000;
    constexpr double kRelTol = 0.02;
    constexpr double kExactTol = 1e-8;
    double worst = 0.0;
    bool exact_ok = true;
    double exact_gap = 0.0;
    for (const auto& mu : registry_weights()) {
        DeltaLimits lim = delta_limits(mu, mu.alpha());
        MultiplierDelta lq = multiplier_delta(mu, kN);
        double scaled = static_cast<double>(kN) * kN * lq.delta_ibp;
        worst = std::max(worst, std::abs(scaled - lim.delta_inf) / std::abs(lim.delta_inf));
        if (mu.label() == kPolyWeight0) {
            double exact = static_cast<double>(kN) * kN / ((kN + 2.0) * (kN + 3.0));
            exact_gap = std::abs(scaled - exact) / exact;
            exact_ok = exact_gap <= kExactTol;
        }
    }
    res.pass = worst <= kRelTol && exact_ok;
    res.detail = "max rel gap " + fmt(worst) + " at n=2000 (bound 0.02); exact cross-check gap " +
                 fmt(exact_gap) + " (bound 1e-8)";
    return res;
}

CriterionResult criterion_bounded_variation() {
    CriterionResult res{4, "n^2 |delta_n| bounded, order-stable; BV sums telescope", false, ""};
    constexpr int kNMax = 2000;
    constexpr double kStabTol = 0.005;
    constexpr double kTelescopeTol = 1e-12;
    double worst_stab = 0.0;
    double telescope_gap = 0.0;
    bool ok = true;
    for (const auto& mu : registry_weights()) {
        BVOptions doubled;
        doubled.order_scale = 2;
        BVReport base = bv_report(mu, mu.alpha(), kNMax);
        BVReport refined = bv_report(mu, mu.alpha(), kNMax, doubled);
        if (!std::isfinite(base.sup_scaled)) ok = false;
        double stab = std::abs(refined.sup_scaled - base.sup_scaled) / base.sup_scaled;
        worst_stab = std::max(worst_stab, stab);
        if (mu.label() == kPolyWeight0) {
            CompensatedSum sum;
            for (int n = 1; n <= kNMax; ++n) sum += base.delta[n];
            telescope_gap = std::abs(sum.result() - (base.t[kNMax] - base.t[0]));
        }
    }
    ok = ok && worst_stab <= kStabTol && telescope_gap <= kTelescopeTol;
    res.pass = ok;
    res.detail = "sup stability " + fmt(worst_stab) + " under order doubling (bound 0.005); telescope gap " +
                 fmt(telescope_gap) + " (bound 1e-12)";
    return res;
}

CriterionResult criterion_limit_rate() {
    CriterionResult res{5, "|t_n - 1/M(1)| <= 3 |delta_inf| / n for n >= 256", false, ""};
    constexpr int kNMax = 2000;
    double worst = 0.0;
    for (const auto& mu : registry_weights()) {
        BVReport report = bv_report(mu, mu.alpha(), kNMax);
        double dinf = std::abs(report.predicted.delta_inf);
        for (int n = 256; n <= kNMax; ++n) {
            double gap = std::abs(report.t[n] - 1.0);
            worst = std::max(worst, gap * n / (3.0 * dinf));
        }
    }
    res.pass = worst <= 1.0;
    res.detail = "max n|t_n - 1| / (3|delta_inf|) = " + fmt(worst) + " (bound 1)";
    return res;
}

CriterionResult criterion_kernel_closed_form() {
    CriterionResult res{6, "kernel series matches c_a/(1-z conj(w))^{2+a}", false, ""};
    constexpr double kRelTol = 1e-8;
    constexpr double kCoeffTol = 1e-12;
    const std::vector<double> alphas{0.0, 0.5, 1.0, 2.5};
    double worst = 0.0;
    double worst_c = 0.0;
    for (double alpha : alphas) {
        WeightSpec lam = WeightSpec::lambda_alpha(alpha);
        int trunc = truncation_degree(alpha, 0.49, 1e-10);
        KernelSeries series = KernelSeries::build(lam, trunc);
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(alpha * 8));
        for (int trial = 0; trial < 100; ++trial) {
            double rz = 0.7 * std::sqrt(uniform01(rng));
            double rw = 0.7 * std::sqrt(uniform01(rng));
            auto z = std::polar(rz, 2.0 * std::numbers::pi * uniform01(rng));
            auto w = std::polar(rw, 2.0 * std::numbers::pi * uniform01(rng));
            auto s = series.eval(z, w);
            auto c = eval_kernel_closed(alpha, z, w);
            worst = std::max(worst, std::abs(s - c) / std::abs(c));
        }
        double c0 = bergman_coeff(lam, 0);
        worst_c = std::max(worst_c, std::abs(c0 - (alpha + 1.0) / std::numbers::pi));
    }
    res.pass = worst <= kRelTol && worst_c <= kCoeffTol;
    res.detail = "max rel err " + fmt(worst) + " over 400 pairs (bound 1e-8); c_a gap " +
                 fmt(worst_c) + " (bound 1e-12)";
    return res;
}

CriterionResult criterion_projection_identity() {
    CriterionResult res{7, "B_mu f = R[B_lambda (f M)] (worked value and residuals)", false, ""};
    constexpr double kWorkedTol = 1e-12;
    constexpr double kResidualTol = 1e-8;

    WeightSpec mu0 = WeightSpec::parse(kPolyWeight0);
    auto grid0 = std::make_shared<const PolarGrid>(mu0, 256, 512);
    GridFunction f = sample("mono:1,0", grid0);
    TaylorCoeffs direct = project(f, mu0, 8);
    TaylorCoeffs via = project_via_identity(f, mu0, 8);
    double worked = std::max(std::abs(direct.c[0] - 4.0 / 9.0), std::abs(via.c[0] - 4.0 / 9.0));
    worked = std::max(worked, identity_residual(f, mu0, 8));

    double worst_res = 0.0;
    for (const auto& mu : registry_weights()) {
        auto grid = std::make_shared<const PolarGrid>(mu, 256, 512);
        for (const char* fn : {"mono:2,1", "sing:0.4", "logsing"}) {
            GridFunction g = sample(fn, grid);
            worst_res = std::max(worst_res, identity_residual(g, mu, 64));
        }
    }
    res.pass = worked <= kWorkedTol && worst_res <= kResidualTol;
    res.detail = "worked-value gap " + fmt(worked) + " (bound 1e-12); max battery residual " +
                 fmt(worst_res) + " (bound 1e-8)";
    return res;
}

CriterionResult criterion_projector_properties() {
    CriterionResult res{8, "projector reproduces, annihilates, idempotent, self-adjoint", false, ""};
    constexpr double kReproduceTol = 1e-12;
    constexpr double kAnnihilateTol = 1e-14;
    constexpr double kIdempotentTol = 1e-11;
    constexpr double kAdjointTol = 1e-10;

    double worst_rep = 0.0, worst_ann = 0.0, worst_idem = 0.0, worst_adj = 0.0;
    for (const auto& mu : registry_weights()) {
        auto grid = std::make_shared<const PolarGrid>(mu, 256, 512);

        TaylorCoeffs poly = project(sample("holo-poly:3,0,2", grid), mu, 8);
        const double expected[3] = {3.0, 0.0, 2.0};
        for (int n = 0; n <= 8; ++n) {
            double want = n < 3 ? expected[n] : 0.0;
            worst_rep = std::max(worst_rep, std::abs(poly.c[n] - want));
        }

        for (const char* fn : {"mono:0,-1", "mono:0,-3"}) {
            TaylorCoeffs anti = project(sample(fn, grid), mu, 8);
            for (const auto& c : anti.c) worst_ann = std::max(worst_ann, std::abs(c));
        }

        GridFunction f = sample("sing:0.4", grid);
        TaylorCoeffs p1 = project(f, mu, 64);
        TaylorCoeffs p2 = project(eval_taylor(p1, grid), mu, 64);
        for (int n = 0; n <= 64; ++n) {
            worst_idem = std::max(worst_idem, std::abs(p1.c[n] - p2.c[n]));
        }

        GridFunction g = sample("mono:2,1", grid);
        GridFunction bf = eval_taylor(p1, grid);
        GridFunction bg = eval_taylor(project(g, mu, 64), grid);
        auto lhs = inner_product(bf, g, mu);
        auto rhs = inner_product(f, bg, mu);
        double scale = std::max(std::abs(lhs), std::abs(rhs));
        worst_adj = std::max(worst_adj, std::abs(lhs - rhs) / scale);
    }

    res.pass = worst_rep <= kReproduceTol && worst_ann <= kAnnihilateTol &&
               worst_idem <= kIdempotentTol && worst_adj <= kAdjointTol;
    res.detail = "reproduce " + fmt(worst_rep) + " (1e-12); annihilate " + fmt(worst_ann) +
                 " (1e-14); idempotence " + fmt(worst_idem) + " (1e-11); self-adjoint " +
                 fmt(worst_adj) + " (1e-10)";
    return res;
}

CriterionResult criterion_partial_sums() {
    CriterionResult res{9, "S_N convergence matches the exact tail; ratios grid-stable", false, ""};
    constexpr double kTailTol = 0.01;
    constexpr double kStabTol = 0.05;

    WeightSpec lam0 = WeightSpec::lambda_alpha(0.0);

    // exact tail pi sum_{n>N} 1/(n^2 (n+1))
    auto exact_tail = [](int n0) {
        CompensatedSum s;
        for (int n = 10000000; n > n0; --n) {
            double dn = n;
            s += 1.0 / (dn * dn * (dn + 1.0));
        }
        return std::numbers::pi * s.result();
    };

    double worst_tail = 0.0;
    {
        auto grid = std::make_shared<const PolarGrid>(lam0, 384, 8192);
        auto rows = sn_experiment(lam0, 2.0, "logsing", 64, grid);
        for (const auto& row : rows) {
            if (row.n_trunc < 8) continue;
            double err2 = row.err * row.err;
            double tail = exact_tail(row.n_trunc);
            worst_tail = std::max(worst_tail, std::abs(err2 / tail - 1.0));
        }
    }

    double worst_stab = 0.0;
    {
        const std::vector<double> ps{1.5, 3.0, 4.0};
        auto base_grid = std::make_shared<const PolarGrid>(lam0, 256, 1024);
        auto fine_grid = std::make_shared<const PolarGrid>(lam0, 512, 2048);
        auto base = sn_experiment(lam0, ps, "logsing", 256, base_grid);
        auto fine = sn_experiment(lam0, ps, "logsing", 256, fine_grid);
        for (double p : ps) {
            double max_base = 0.0, max_fine = 0.0;
            for (const auto& row : base) {
                if (row.p == p) max_base = std::max(max_base, row.ratio);
            }
            for (const auto& row : fine) {
                if (row.p == p) max_fine = std::max(max_fine, row.ratio);
            }
            worst_stab = std::max(worst_stab, std::abs(max_fine / max_base - 1.0));
        }
    }

    res.pass = worst_tail <= kTailTol && worst_stab <= kStabTol;
    res.detail = "tail match gap " + fmt(worst_tail) + " for N in {8..64} (bound 0.01); max-ratio stability " +
                 fmt(worst_stab) + " under grid doubling (bound 0.05)";
    return res;
}

CriterionResult criterion_opnorm() {
    CriterionResult res{10, "projection norm ratios finite, grid-stable, non-degenerate", false, ""};
    constexpr double kStabTol = 0.01;
    const std::vector<double> ps{1.5, 2.0, 3.0, 4.0};
    const std::vector<std::string> battery{"holo-poly:1,0,0.5", "mono:2,1", "sing:0.25",
                                           "logsing"};

    double worst_stab = 0.0;
    double min_poly_ratio = 1e300;
    bool finite = true;
    for (const auto& mu : registry_weights()) {
        auto base_grid = std::make_shared<const PolarGrid>(mu, 256, 512);
        auto fine_grid = std::make_shared<const PolarGrid>(mu, 512, 1024);
        OpNormTable base = opnorm_experiment(mu, ps, battery, 64, base_grid);
        OpNormTable fine = opnorm_experiment(mu, ps, battery, 64, fine_grid);
        for (std::size_t i = 0; i < base.rows.size(); ++i) {
            if (!std::isfinite(base.rows[i].ratio) || !std::isfinite(fine.rows[i].ratio)) {
                finite = false;
                continue;
            }
            worst_stab = std::max(worst_stab,
                                  std::abs(fine.rows[i].ratio / base.rows[i].ratio - 1.0));
            if (base.rows[i].fn == battery[0]) {
                min_poly_ratio = std::min(min_poly_ratio, base.rows[i].ratio);
            }
        }
    }

    res.pass = finite && worst_stab <= kStabTol && min_poly_ratio >= 1.0 - 1e-9;
    res.detail = "stability " + fmt(worst_stab) + " under grid doubling (bound 0.01); polynomial ratio >= " +
                 fmt(min_poly_ratio) + " (bound 1)";
    return res;
}

} // namespace

std::vector<CriterionResult> run_verification_suite() {
    using Runner = CriterionResult (*)();
    const Runner runners[] = {
        criterion_closed_form_multipliers, criterion_delta_limits, criterion_scaled_difference,
        criterion_bounded_variation,       criterion_limit_rate,   criterion_kernel_closed_form,
        criterion_projection_identity,     criterion_projector_properties,
        criterion_partial_sums,            criterion_opnorm,
    };
    std::vector<CriterionResult> results;
    int id = 1;
    for (Runner run : runners) {
        try {
            results.push_back(run());
        } catch (const std::exception& e) {
            CriterionResult failed{id, "criterion aborted", false, e.what()};
            results.push_back(failed);
        }
        results.back().id = id++;
    }
    return results;
}

std::string to_json(const std::vector<CriterionResult>& results) {
    std::string out = "{\"criteria\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i > 0) out += ',';
        out += "{\"id\":" + std::to_string(results[i].id) + ",\"name\":\"" +
               io::json_escape(results[i].name) + "\",\"pass\":" +
               (results[i].pass ? "true" : "false") + ",\"detail\":\"" +
               io::json_escape(results[i].detail) + "\"}";
    }
    out += "],\"all_pass\":";
    out += all_pass(results) ? "true" : "false";
    out += '}';
    return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

} // namespace bergman::verification
