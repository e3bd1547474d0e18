#include "bergman/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "bergman/errors.hpp"
#include "bergman/io.hpp"

namespace bergman {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

PolarGrid::PolarGrid(const WeightSpec& weight, int radial_count, int angular_count)
    : weight_(weight), R_(radial_count), K_(angular_count) {
    if (R_ < 1) throw DomainError("PolarGrid: need at least one radial node");
    if (!is_power_of_two(K_) || K_ < 4) {
        throw DomainError("PolarGrid: angular count must be a power of two >= 4");
    }
    rule_ = cached_gauss_jacobi_rule(R_, weight_.alpha());
    r_.resize(R_);
    for (int j = 0; j < R_; ++j) r_[j] = std::sqrt(rule_->nodes[j]);
    unit_circle_.resize(K_);
    for (int k = 0; k < K_; ++k) {
        unit_circle_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / K_);
    }
}

double PolarGrid::theta(int k) const { return 2.0 * std::numbers::pi * k / K_; }

std::complex<double> PolarGrid::point(int j, int k) const {
    return r_[j] * unit_circle_[k];
}

GridFunction::GridFunction(std::shared_ptr<const PolarGrid> grid,
                           std::vector<std::complex<double>> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
    auto expected = static_cast<std::size_t>(grid_->radial_count()) *
                    static_cast<std::size_t>(grid_->angular_count());
    if (samples_.size() != expected) {
        throw DomainError("GridFunction: sample count does not match grid");
    }
}

std::complex<double> GridFunction::mode(int j, int m) const {
    if (modes_.empty()) throw DomainError("GridFunction::mode: modes not computed");
    int k = grid_->angular_count();
    int bin = ((m % k) + k) % k;
    return modes_[static_cast<std::size_t>(j) * k + bin];
}

std::string GridFunction::to_csv() const {
    std::string out = "r,theta,re,im\n";
    int k_count = grid_->angular_count();
    for (int j = 0; j < grid_->radial_count(); ++j) {
        for (int k = 0; k < k_count; ++k) {
            auto v = sample(j, k);
            out += io::fmt_double(grid_->radius(j)) + ',' + io::fmt_double(grid_->theta(k)) +
                   ',' + io::fmt_double(v.real()) + ',' + io::fmt_double(v.imag()) + '\n';
        }
    }
    return out;
}

void fft_forward(std::complex<double>* data, int n) {
    if (!is_power_of_two(n)) throw DomainError("fft_forward: length must be a power of two");

    // bit-reversal permutation
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    // one shared twiddle table: w[t] = e^{-2 pi i t / n}
    static thread_local std::vector<std::complex<double>> twiddle;
    static thread_local int twiddle_n = 0;
    if (twiddle_n != n) {
        twiddle.resize(n / 2);
        for (int t = 0; t < n / 2; ++t) {
            twiddle[t] = std::polar(1.0, -2.0 * std::numbers::pi * t / n);
        }
        twiddle_n = n;
    }

    for (int len = 2; len <= n; len <<= 1) {
        int half = len >> 1;
        int stride = n / len;
        for (int start = 0; start < n; start += len) {
            for (int t = 0; t < half; ++t) {
                std::complex<double> even = data[start + t];
                std::complex<double> odd = data[start + t + half] * twiddle[t * stride];
                data[start + t] = even + odd;
                data[start + t + half] = even - odd;
            }
        }
    }
}

GridFunction angular_modes(GridFunction f) {
    const PolarGrid& grid = *f.grid_;
    int k_count = grid.angular_count();
    f.modes_ = f.samples_;
    double inv_k = 1.0 / k_count;
    for (int j = 0; j < grid.radial_count(); ++j) {
        auto* row = f.modes_.data() + static_cast<std::size_t>(j) * k_count;
        fft_forward(row, k_count);
        for (int m = 0; m < k_count; ++m) row[m] *= inv_k;
    }
    return f;
}

} // namespace bergman
