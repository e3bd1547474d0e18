#include "bergman/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

double parse_decimal(std::string_view s, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw ParseError(std::string("weight spec: bad decimal for ") + what + ": '" +
                         std::string(s) + "'");
    }
    return value;
}

std::vector<double> parse_decimal_list(std::string_view s, const char* what) {
    std::vector<double> out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_decimal(s.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

WeightSpec WeightSpec::parse(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError("weight spec: whitespace is forbidden");
        }
    }
    auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("weight spec: expected 'alpha=<decimal>;M=<form>'");
    }
    std::string_view alpha_part = text.substr(0, semi);
    std::string_view m_part = text.substr(semi + 1);
    if (!alpha_part.starts_with("alpha=") || !m_part.starts_with("M=")) {
        throw ParseError("weight spec: expected 'alpha=<decimal>;M=<form>'");
    }

    WeightSpec w;
    w.alpha_ = parse_decimal(alpha_part.substr(6), "alpha");
    w.label_ = std::string(text);

    std::string_view form = m_part.substr(2);
    if (form == "one") {
        w.form_ = MForm::One;
    } else if (form.starts_with("poly-r2:")) {
        w.form_ = MForm::PolyR2;
        w.coeffs_ = parse_decimal_list(form.substr(8), "poly-r2 coefficient");
    } else if (form.starts_with("exp-r2:")) {
        w.form_ = MForm::ExpR2;
        w.exp_a_ = parse_decimal(form.substr(7), "exp-r2 parameter");
    } else {
        throw ParseError("weight spec: unknown M form '" + std::string(form) + "'");
    }

    w.validate();
    return w;
}

WeightSpec WeightSpec::lambda_alpha(double alpha) {
    WeightSpec w;
    w.alpha_ = alpha;
    w.form_ = MForm::One;
    w.label_ = "alpha=" + std::to_string(alpha) + ";M=one";
    w.validate();
    return w;
}

void WeightSpec::validate() {
    if (!(alpha_ > -1.0)) {
        throw DomainError("weight spec: alpha must be > -1");
    }
    if (form_ == MForm::PolyR2) {
        if (coeffs_.empty()) {
            throw ParseError("weight spec: poly-r2 needs at least one coefficient");
        }
        double sum = 0.0;
        for (double c : coeffs_) sum += c;
        if (std::abs(sum - 1.0) > 1e-12) {
            throw DomainError("weight spec: poly-r2 coefficients must sum to 1 (M(1)=1)");
        }
    }
    // Strict positivity of M on a dense grid; heuristic but effective for the
    // registry forms (`one` and `exp-r2` pass trivially).
    constexpr int kGridPoints = 1001;
    min_m_ = std::numeric_limits<double>::infinity();
    max_m_ = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridPoints; ++i) {
        double r = static_cast<double>(i) / (kGridPoints - 1);
        double v = m(r);
        if (!(v > 0.0)) {
            throw DomainError("weight spec: M must be strictly positive on [0,1]");
        }
        min_m_ = std::min(min_m_, v);
        max_m_ = std::max(max_m_, v);
    }
}

int WeightSpec::poly_degree() const {
    switch (form_) {
        case MForm::One: return 0;
        case MForm::PolyR2: return static_cast<int>(coeffs_.size()) - 1;
        case MForm::ExpR2: return -1;
    }
    return -1;
}

double WeightSpec::m_u(double u) const {
    switch (form_) {
        case MForm::One:
            return 1.0;
        case MForm::PolyR2: {
            double acc = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                acc = acc * u + *it;
            }
            return acc;
        }
        case MForm::ExpR2:
            return std::exp(exp_a_ * (u - 1.0));
    }
    return 1.0;
}

double WeightSpec::m_prime_over_r_u(double u) const {
    switch (form_) {
        case MForm::One:
            return 0.0;
        case MForm::PolyR2: {
            // M'(r)/r = sum_k 2k c_k u^{k-1}
            double acc = 0.0;
            for (std::size_t k = coeffs_.size(); k-- > 1;) {
                acc = acc * u + 2.0 * static_cast<double>(k) * coeffs_[k];
            }
            return acc;
        }
        case MForm::ExpR2:
            return 2.0 * exp_a_ * std::exp(exp_a_ * (u - 1.0));
    }
    return 0.0;
}

double WeightSpec::m_second_u(double u) const {
    switch (form_) {
        case MForm::One:
            return 0.0;
        case MForm::PolyR2: {
            // M''(r) = sum_k 2k (2k-1) c_k u^{k-1}
            double acc = 0.0;
            for (std::size_t k = coeffs_.size(); k-- > 1;) {
                double tk = 2.0 * static_cast<double>(k);
                acc = acc * u + tk * (tk - 1.0) * coeffs_[k];
            }
            return acc;
        }
        case MForm::ExpR2: {
            double a = exp_a_;
            return (2.0 * a + 4.0 * a * a * u) * std::exp(a * (u - 1.0));
        }
    }
    return 0.0;
}

double WeightSpec::g_u(double u) const {
    switch (form_) {
        case MForm::One:
            return 0.0;
        case MForm::PolyR2: {
            // 1 - M = (1-u) sum_k c_k (1 + u + ... + u^{k-1}), exactly.
            double g = 0.0;
            double geom = 0.0;
            double upow = 1.0;
            for (std::size_t k = 1; k < coeffs_.size(); ++k) {
                geom += upow;
                upow *= u;
                g += coeffs_[k] * geom;
            }
            return g;
        }
        case MForm::ExpR2: {
            // (1 - e^{a s}) / (-s) at s = u - 1, limit a at s = 0.
            double s = u - 1.0;
            if (s == 0.0) return exp_a_;
            return std::expm1(exp_a_ * s) / s;
        }
    }
    return 0.0;
}

} // namespace bergman
