#include "bergman/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bergman/errors.hpp"
#include "bergman/moments.hpp"

namespace bergman {

namespace {

// Accumulator for sum_i w_i * v_i honoring the precision mode.
struct Acc {
    Precision prec;
    CompensatedSum cs;
    DDouble dd;

    explicit Acc(Precision p) : prec(p) {}
    void add(double w, double v) {
        if (prec == Precision::Extended) {
            dd += DDouble::product(w, v);
        } else {
            cs += w * v;
        }
    }
    double result() const {
        return prec == Precision::Extended ? dd.result() : cs.result();
    }
};

// Smooth factors of the C1/C2/C3 integrands in the variable u = r^2. Each
// integral is (1/2) int u^k (1-u)^alpha G(u) du with the Jacobi factor inside
// the rule, so the only n-dependence is the monomial power.
struct DeltaIntegrands {
    std::vector<double> m;  // M(sqrt u)
    std::vector<double> g1; // C1: -M'(r)/r - 2 alpha g
    std::vector<double> g2; // C2: (M'(r)/r)(1-u) - 2(alpha+1) M
    std::vector<double> g3; // C3: -M''(1-u) - 2(alpha+1)(-2u M'(r)/r + 1 - M) + 4 alpha(alpha+1) u g

    DeltaIntegrands(const WeightSpec& mu, const QuadratureRule& rule) {
        double alpha = mu.alpha();
        std::size_t q = rule.nodes.size();
        m.resize(q);
        g1.resize(q);
        g2.resize(q);
        g3.resize(q);
        for (std::size_t i = 0; i < q; ++i) {
            double u = rule.nodes[i];
            double mv = mu.m_u(u);
            double mp = mu.m_prime_over_r_u(u);
            double ms = mu.m_second_u(u);
            double gv = mu.g_u(u);
            m[i] = mv;
            g1[i] = -mp - 2.0 * alpha * gv;
            g2[i] = mp * (1.0 - u) - 2.0 * (alpha + 1.0) * mv;
            g3[i] = -ms * (1.0 - u) - 2.0 * (alpha + 1.0) * (-2.0 * u * mp + 1.0 - mv) +
                    4.0 * alpha * (alpha + 1.0) * u * gv;
        }
    }
};

double delta_ibp_from(int n, double c1, double c2, double c3, double c4, double a) {
    double two_n = 2.0 * n;
    return c1 * c2 / ((two_n + 2.0) * two_n * a) - c3 * c4 / (two_n * (two_n + 1.0) * a);
}

} // namespace

MultiplierDelta multiplier_delta(const WeightSpec& mu, int n, Precision precision,
                                 int order_scale) {
    if (n < 1) throw DomainError("multiplier_delta: n must be >= 1");
    if (order_scale < 1) throw DomainError("multiplier_delta: order_scale must be >= 1");

    int q = moment_order_policy(mu, n + 1) * order_scale;
    auto rule = cached_gauss_jacobi_rule(q, mu.alpha());
    DeltaIntegrands gi(mu, *rule);

    Acc c1(precision), c2(precision), c3(precision), c4(precision);
    Acc i_prev(precision), l_n(precision), l_prev(precision);
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        double u = rule->nodes[i];
        double w = rule->weights[i];
        double un = std::pow(u, n);
        double un_prev = un / u;
        c1.add(w, un * u * gi.g1[i]);
        c2.add(w, un * gi.g2[i]);
        c3.add(w, un * gi.g3[i]);
        c4.add(w, un * gi.m[i]);
        i_prev.add(w, un_prev * gi.m[i]);
        l_n.add(w, un);
        l_prev.add(w, un_prev);
    }

    MultiplierDelta out;
    out.n = n;
    out.c1 = 0.5 * c1.result();
    out.c2 = 0.5 * c2.result();
    out.c3 = 0.5 * c3.result();
    out.c4 = 0.5 * c4.result();
    double i_n = out.c4;
    double i_n_prev = 0.5 * i_prev.result();
    out.a = i_n * i_n_prev;
    out.delta_direct = 0.5 * l_n.result() / i_n - 0.5 * l_prev.result() / i_n_prev;
    out.delta_ibp = delta_ibp_from(n, out.c1, out.c2, out.c3, out.c4, out.a);
    return out;
}

DeltaLimits delta_limits(const WeightSpec& mu, double alpha) {
    DeltaLimits lim;
    double mp1 = mu.m_prime_at_one();
    double m1 = mu.m(1.0);
    lim.l12 = 2.0 * (alpha + 1.0) * (alpha + 1.0) * mp1;
    lim.l34 = 2.0 * (alpha + 2.0) * (alpha + 1.0) * mp1 - 2.0 * (1.0 + alpha) * (1.0 - m1);
    lim.delta_inf = (lim.l12 - lim.l34) / 4.0;
    return lim;
}

std::vector<LimitRow> limit_convergence(const WeightSpec& mu, double alpha,
                                        const std::vector<int>& ns, Precision precision) {
    if (alpha != mu.alpha()) {
        throw DomainError("limit_convergence: comparison alpha must match the weight");
    }
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw DomainError("limit_convergence: ns must be increasing");
    }
    std::vector<LimitRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        MultiplierDelta lq = multiplier_delta(mu, n, precision);
        LimitRow row;
        row.n = n;
        row.t_n = moment(WeightSpec::lambda_alpha(alpha), n, precision).first /
                  moment(mu, n, precision).first;
        row.n2_delta = static_cast<double>(n) * n * lq.delta_ibp;
        row.c1c2_over_a = lq.c1 * lq.c2 / lq.a;
        row.c3c4_over_a = lq.c3 * lq.c4 / lq.a;
        rows.push_back(row);
    }
    return rows;
}

BVReport bv_report(const WeightSpec& mu, double alpha, int n_max, const BVOptions& options) {
    if (n_max < 16) throw DomainError("bv_report: n_max must be >= 16");
    if (alpha != mu.alpha()) {
        throw DomainError("bv_report: comparison alpha must match the weight");
    }
    if (options.order_scale < 1) throw DomainError("bv_report: order_scale must be >= 1");

    int q = moment_order_policy(mu, n_max + 1) * options.order_scale;
    auto rule = cached_gauss_jacobi_rule(q, mu.alpha());
    DeltaIntegrands gi(mu, *rule);
    const Precision prec = options.precision;
    std::size_t q_count = rule->nodes.size();

    // Shared-rule tables over n. Every integrand is u^n (or u^{n+1}) times a
    // precomputed smooth factor; one pow per (node, n).
    std::vector<double> i_mu(n_max + 1), i_lam(n_max + 1);
    std::vector<double> c1(n_max + 1), c2(n_max + 1), c3(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        Acc am(prec), al(prec), a1(prec), a2(prec), a3(prec);
        for (std::size_t i = 0; i < q_count; ++i) {
            double u = rule->nodes[i];
            double w = rule->weights[i];
            double un = std::pow(u, n);
            am.add(w, un * gi.m[i]);
            al.add(w, un);
            if (n >= 1) {
                a1.add(w, un * u * gi.g1[i]);
                a2.add(w, un * gi.g2[i]);
                a3.add(w, un * gi.g3[i]);
            }
        }
        i_mu[n] = 0.5 * am.result();
        i_lam[n] = 0.5 * al.result();
        c1[n] = 0.5 * a1.result();
        c2[n] = 0.5 * a2.result();
        c3[n] = 0.5 * a3.result();
    }

    BVReport report;
    report.weight = mu;
    report.alpha = alpha;
    report.n_max = n_max;
    report.predicted = delta_limits(mu, alpha);
    report.t.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) report.t[n] = i_lam[n] / i_mu[n];

    report.delta.assign(n_max + 1, 0.0);
    report.method.assign(n_max + 1, DeltaMethod::Direct);
    int crossover = std::min(options.crossover, n_max);
    for (int n = 1; n <= n_max; ++n) {
        double direct = report.t[n] - report.t[n - 1];
        double ibp = delta_ibp_from(n, c1[n], c2[n], c3[n], i_mu[n], i_mu[n] * i_mu[n - 1]);
        if (n >= options.overlap_lo && n <= crossover) {
            double scale = std::max(std::abs(direct), 1.0 / (static_cast<double>(n) * n));
            if (std::abs(direct - ibp) > 1e-6 * scale) {
                throw CheckError(
                    "bv_report: direct and integrated-by-parts differences disagree at n=" +
                    std::to_string(n) + "; quadrature misconfiguration");
            }
        }
        if (n <= crossover) {
            report.delta[n] = direct;
        } else {
            report.delta[n] = ibp;
            report.method[n] = DeltaMethod::Ibp;
        }
    }

    CompensatedSum bv;
    bv += std::abs(report.t[0]);
    double sup = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        bv += std::abs(report.delta[n]);
        sup = std::max(sup, static_cast<double>(n) * n * std::abs(report.delta[n]));
    }
    report.sup_scaled = sup;
    report.bv_partial = bv.result();
    report.limit_gap = std::abs(report.t[n_max] - 1.0 / mu.m(1.0));
    return report;
}

namespace {

void check_norm_exponent(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("experiment: p must lie in (1, inf)");
    }
}

} // namespace

OpNormTable opnorm_experiment(const WeightSpec& mu, const std::vector<double>& ps,
                              const std::vector<std::string>& battery, int degree,
                              std::shared_ptr<const PolarGrid> grid) {
    if (battery.empty()) throw DomainError("opnorm_experiment: battery must be nonempty");
    for (double p : ps) check_norm_exponent(p);

    std::vector<FnSpec> fns;
    fns.reserve(battery.size());
    for (const auto& text : battery) {
        FnSpec fn = FnSpec::parse(text);
        if (fn.kind == FnSpec::Kind::Sing) {
            for (double p : ps) {
                if (!(p * fn.sing_s <= 2.0 + mu.alpha() - 0.1)) {
                    throw DomainError("opnorm_experiment: '" + text +
                                      "' lies outside L^p(mu) (guard p*s <= 2+alpha-0.1)");
                }
            }
        }
        fns.push_back(std::move(fn));
    }

    OpNormTable table;
    for (const auto& fn : fns) {
        GridFunction f = angular_modes(sample(fn, grid));
        GridFunction bf = eval_taylor(project(f, mu, degree), grid);
        for (double p : ps) {
            OpNormRow row;
            row.p = p;
            row.fn = fn.text;
            row.ratio = lp_norm(bf, p, mu) / lp_norm(f, p, mu);
            if (!std::isfinite(row.ratio)) {
                throw CheckError("opnorm_experiment: nonfinite ratio for '" + fn.text + "'");
            }
            table.max_ratio = std::max(table.max_ratio, row.ratio);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

OpNormTable opnorm_experiment(const WeightSpec& mu, double p,
                              const std::vector<std::string>& battery, int degree,
                              std::shared_ptr<const PolarGrid> grid) {
    return opnorm_experiment(mu, std::vector<double>{p}, battery, degree, std::move(grid));
}

std::vector<SnRow> sn_experiment(const WeightSpec& w, const std::vector<double>& ps,
                                 const std::string& fn_spec, int n_max,
                                 std::shared_ptr<const PolarGrid> grid) {
    if (n_max < 1) throw DomainError("sn_experiment: N_max must be >= 1");
    for (double p : ps) check_norm_exponent(p);

    FnSpec fn = FnSpec::parse(fn_spec);
    if (fn.kind == FnSpec::Kind::Mono) {
        throw DomainError("sn_experiment: registry member must have a known Taylor series");
    }
    if (fn.kind == FnSpec::Kind::Sing) {
        for (double p : ps) {
            if (!(fn.sing_s < (2.0 + w.alpha()) / p)) {
                throw DomainError("sn_experiment: sing exponent violates s < (2+alpha)/p");
            }
        }
    }

    const PolarGrid& g = *grid;
    GridFunction f = sample(fn, grid);
    TaylorCoeffs coeffs = taylor_coeffs_of(fn, n_max);

    int r_count = g.radial_count();
    int k_count = g.angular_count();
    std::vector<double> cell_weight(r_count);
    for (int j = 0; j < r_count; ++j) {
        cell_weight[j] = w.m(g.radius(j)) * g.radial_weight(j) * std::numbers::pi / k_count;
    }

    std::vector<double> f_norm(ps.size());
    {
        std::vector<CompensatedSum> acc(ps.size());
        for (int j = 0; j < r_count; ++j) {
            for (int k = 0; k < k_count; ++k) {
                double sq = std::norm(f.sample(j, k));
                for (std::size_t ip = 0; ip < ps.size(); ++ip) {
                    acc[ip] += std::pow(sq, 0.5 * ps[ip]) * cell_weight[j];
                }
            }
        }
        for (std::size_t ip = 0; ip < ps.size(); ++ip) {
            f_norm[ip] = std::pow(acc[ip].result(), 1.0 / ps[ip]);
        }
    }

    std::vector<SnRow> rows;
    for (int trunc = 1; trunc <= n_max; trunc *= 2) {
        GridFunction sn = eval_taylor(partial_sum(coeffs, trunc), grid);
        std::vector<CompensatedSum> num(ps.size()), gap(ps.size());
        for (int j = 0; j < r_count; ++j) {
            for (int k = 0; k < k_count; ++k) {
                auto sv = sn.sample(j, k);
                double sq = std::norm(sv);
                double dq = std::norm(sv - f.sample(j, k));
                for (std::size_t ip = 0; ip < ps.size(); ++ip) {
                    num[ip] += std::pow(sq, 0.5 * ps[ip]) * cell_weight[j];
                    gap[ip] += std::pow(dq, 0.5 * ps[ip]) * cell_weight[j];
                }
            }
        }
        for (std::size_t ip = 0; ip < ps.size(); ++ip) {
            SnRow row;
            row.p = ps[ip];
            row.n_trunc = trunc;
            row.ratio = std::pow(num[ip].result(), 1.0 / ps[ip]) / f_norm[ip];
            row.err = std::pow(gap[ip].result(), 1.0 / ps[ip]);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<SnRow> sn_experiment(const WeightSpec& w, double p, const std::string& fn_spec,
                                 int n_max, std::shared_ptr<const PolarGrid> grid) {
    return sn_experiment(w, std::vector<double>{p}, fn_spec, n_max, std::move(grid));
}

} // namespace bergman
