#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Polar product grid on the unit disc: R Gauss-Jacobi radii (r_j = sqrt(u_j)
/// with the (1-u)^alpha factor inside the weights omega_j) times K uniform
/// angles theta_k = 2 pi k / K. K must be a power of two, K >= 4, for the
/// angular FFT. The same radial rule serves norms and projections.
class PolarGrid {
public:
    PolarGrid(const WeightSpec& weight, int radial_count, int angular_count);

    const WeightSpec& weight() const { return weight_; }
    double alpha() const { return weight_.alpha(); }
    int radial_count() const { return R_; }
    int angular_count() const { return K_; }

    double radius(int j) const { return r_[j]; }
    double radial_weight(int j) const { return rule_->weights[j]; }
    double theta(int k) const;
    std::complex<double> point(int j, int k) const;

    const QuadratureRule& rule() const { return *rule_; }
    double max_radius() const { return r_.back(); }

private:
    WeightSpec weight_;
    int R_;
    int K_;
    std::shared_ptr<const QuadratureRule> rule_;
    std::vector<double> r_;
    std::vector<std::complex<double>> unit_circle_; // e^{i theta_k}
};

/// Complex samples on a PolarGrid, optionally with the angular Fourier modes
/// fhat_m(r_j), m in [-K/2, K/2), attached. Immutable once built.
class GridFunction {
public:
    GridFunction(std::shared_ptr<const PolarGrid> grid,
                 std::vector<std::complex<double>> samples);

    const PolarGrid& grid() const { return *grid_; }
    std::shared_ptr<const PolarGrid> grid_ptr() const { return grid_; }

    std::complex<double> sample(int j, int k) const {
        return samples_[static_cast<std::size_t>(j) * grid_->angular_count() + k];
    }
    const std::vector<std::complex<double>>& samples() const { return samples_; }

    bool has_modes() const { return !modes_.empty(); }

    /// fhat_m(r_j); m may be negative (wrapped modulo K). Requires has_modes().
    std::complex<double> mode(int j, int m) const;

    /// CSV rows "r,theta,re,im" with a trailing newline, radii outer loop.
    std::string to_csv() const;

    friend GridFunction angular_modes(GridFunction f);

private:
    std::shared_ptr<const PolarGrid> grid_;
    std::vector<std::complex<double>> samples_;
    std::vector<std::complex<double>> modes_; // [j*K + bin], empty until computed
};

/// Returns a copy of f with modes populated:
/// fhat_m(r_j) = (1/K) sum_k f(r_j e^{i theta_k}) e^{-i m theta_k}
/// computed by a radix-2 FFT per radius.
GridFunction angular_modes(GridFunction f);

/// In-place forward transform a_m := sum_k a_k e^{-2 pi i m k / n}; n a power
/// of two. Exposed for testing against the naive transform.
void fft_forward(std::complex<double>* data, int n);

} // namespace bergman
