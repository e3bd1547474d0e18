#include "bergman/projector.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "bergman/errors.hpp"

namespace bergman {

MultiplierSeq MultiplierSeq::build(const WeightSpec& mu, int n_max, Precision precision) {
    if (n_max < 0) throw DomainError("MultiplierSeq: n_max must be >= 0");
    MultiplierSeq seq;
    seq.weight = mu;
    seq.alpha = mu.alpha();
    seq.n_max = n_max;

    MomentTable lam = MomentTable::compute(WeightSpec::lambda_alpha(mu.alpha()), n_max, precision);
    MomentTable m = MomentTable::compute(mu, n_max, precision);
    seq.t.resize(n_max + 1);
    seq.method.assign(n_max + 1, Method::RatioOfMoments);

    double lo = 1.0 / mu.max_m();
    double hi = 1.0 / mu.min_m();
    double slack = 1e-10 * hi;
    for (int n = 0; n <= n_max; ++n) {
        seq.t[n] = lam.value(n) / m.value(n);
        if (!(seq.t[n] >= lo - slack && seq.t[n] <= hi + slack)) {
            throw CheckError("MultiplierSeq: t_n outside the moment sandwich at n=" +
                             std::to_string(n));
        }
    }
    if (n_max >= 64) {
        // approach to the limit 1/M(1) = 1; skipped when the multiplier is
        // constant to rounding (mu = lambda_alpha)
        double gap_end = std::abs(seq.t[n_max] - 1.0);
        double gap_quarter = std::abs(seq.t[(n_max + 3) / 4] - 1.0);
        if (!(gap_end <= 1e-13 && gap_quarter <= 1e-13) && !(gap_end < gap_quarter)) {
            throw CheckError("MultiplierSeq: no approach to the limit 1/M(1)");
        }
    }
    return seq;
}

namespace {

void check_projection_preconditions(const PolarGrid& grid, const WeightSpec& w, int n) {
    if (grid.alpha() != w.alpha()) {
        throw DomainError("project: grid was built for a different alpha");
    }
    if (n < 0) throw DomainError("project: degree must be >= 0");
    if (n >= grid.angular_count() / 2) {
        throw DomainError("project: degree must be < K/2 for mode recovery");
    }
    if (n > grid.radial_count() - 2) {
        throw DomainError("project: degree must be <= R-2 for radial exactness");
    }
}

} // namespace

TaylorCoeffs project(const GridFunction& f, const WeightSpec& w, int n) {
    const PolarGrid& grid = f.grid();
    check_projection_preconditions(grid, w, n);

    const GridFunction* with_modes = &f;
    std::optional<GridFunction> computed;
    if (!f.has_modes()) {
        computed.emplace(angular_modes(GridFunction(f.grid_ptr(), f.samples())));
        with_modes = &*computed;
    }

    int r_count = grid.radial_count();
    std::vector<double> m_at(r_count);
    for (int j = 0; j < r_count; ++j) m_at[j] = w.m(grid.radius(j));

    // c_k = (1/2) sum_j omega_j fhat_k(r_j) r_j^k M(r_j) / I_k, with I_k
    // through the same rule (and the same r_j^k factors) so that holomorphic
    // polynomials are reproduced to rounding. Modes with m < 0 are never read.
    TaylorCoeffs out;
    out.c.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        CompensatedSum num_re, num_im, den;
        for (int j = 0; j < r_count; ++j) {
            double rk = std::pow(grid.radius(j), k);
            double base = grid.radial_weight(j) * rk * m_at[j];
            auto mode = with_modes->mode(j, k);
            num_re += base * mode.real();
            num_im += base * mode.imag();
            den += base * rk;
        }
        out.c[k] = std::complex<double>(num_re.result(), num_im.result()) / den.result();
    }
    return out;
}

TaylorCoeffs multiplier_apply(const MultiplierSeq& m, const TaylorCoeffs& f) {
    if (f.degree() > m.n_max) {
        throw DomainError("multiplier_apply: coefficient degree exceeds multiplier range");
    }
    TaylorCoeffs out = f;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] *= m.t[i];
    return out;
}

TaylorCoeffs project_via_identity(const GridFunction& f, const WeightSpec& mu, int n) {
    const PolarGrid& grid = f.grid();
    check_projection_preconditions(grid, mu, n);

    std::vector<std::complex<double>> scaled = f.samples();
    int k_count = grid.angular_count();
    for (int j = 0; j < grid.radial_count(); ++j) {
        double mj = mu.m(grid.radius(j));
        auto* row = scaled.data() + static_cast<std::size_t>(j) * k_count;
        for (int k = 0; k < k_count; ++k) row[k] *= mj;
    }
    GridFunction fm(f.grid_ptr(), std::move(scaled));

    TaylorCoeffs base = project(fm, WeightSpec::lambda_alpha(mu.alpha()), n);
    return multiplier_apply(MultiplierSeq::build(mu, n), base);
}

double identity_residual(const GridFunction& f, const WeightSpec& mu, int n) {
    TaylorCoeffs direct = project(f, mu, n);
    TaylorCoeffs via = project_via_identity(f, mu, n);
    double residual = 0.0;
    for (int k = 0; k <= n; ++k) {
        residual = std::max(residual, std::abs(direct.c[k] - via.c[k]));
    }
    return residual;
}

int default_projection_degree(const PolarGrid& grid) {
    return std::min({grid.angular_count() / 2 - 1, grid.radial_count() - 2, 128});
}

} // namespace bergman
