#include "cosp/cos_improved.hpp"

#include <cmath>
#include <numbers>

#include "cosp/cos_classic.hpp"
#include "cosp/errors.hpp"

namespace cosp {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_tiny_negative(double p) {
    return (p < 0.0 && p >= -1e-12) ? 0.0 : p;
}

}  // namespace

double vk_put_improved(int k, double z, double forward, double a, double b) {
    const double w = b - a;
    const double ez = std::exp(z);
    if (k == 0) return 2.0 * forward * (std::exp(a) - ez + ez * (z - a)) / w;
    const double eta = k * kPi / w;
    const double co = std::cos(eta * (z - a));
    const double si = std::sin(eta * (z - a));
    return (2.0 * forward / (w * (1.0 + eta * eta))) * (std::exp(a) - co * ez - eta * si * ez)
           + (2.0 * forward / (w * eta)) * si * ez;
}

CosEngine::CosEngine(const ModelParams& model, double forward, double discount, double maturity,
                     int n, const TruncationRange& range)
    : model_(model), forward_(forward), discount_(discount), maturity_(maturity), range_(range) {
    validate(model_);
    validate(OptionSpec{forward, forward, maturity, discount, OptionKind::Put});
    if (n < 2) throw ValidationError("CosEngine: n must be >= 2");
    if (!(range.a < range.b) || !std::isfinite(range.a) || !std::isfinite(range.b))
        throw ValidationError("CosEngine: invalid truncation range");
    const double w = range.width();
    phi_terms_.resize(n);
    for (int k = 0; k < n; ++k) {
        const double eta = k * kPi / w;
        phi_terms_[k] = (cf(model_, eta, maturity_) * std::polar(1.0, -eta * range.a)).real();
    }
}

PriceResult CosEngine::price_put(double strike) const {
    if (!(strike > 0.0) || !std::isfinite(strike))
        throw ValidationError("CosEngine::price_put: strike must be > 0");
    const double z = std::log(strike / forward_);
    const int n = static_cast<int>(phi_terms_.size());
    if (z < range_.a) return {0.0, Method::Improved, n, range_, Fallback::Zero};
    if (z > range_.b) {
        return {discount_ * std::max(strike - forward_, 0.0), Method::Improved, n, range_,
                Fallback::Intrinsic};
    }
    double sum = 0.5 * phi_terms_[0] * vk_put_improved(0, z, forward_, range_.a, range_.b);
    for (int k = 1; k < n; ++k)
        sum += phi_terms_[k] * vk_put_improved(k, z, forward_, range_.a, range_.b);
    return {clamp_tiny_negative(discount_ * sum), Method::Improved, n, range_, Fallback::None};
}

PriceResult CosEngine::price(double strike, OptionKind kind) const {
    PriceResult put = price_put(strike);
    if (kind == OptionKind::Put) return put;
    put.price += discount_ * (forward_ - strike);
    return put;
}

std::vector<PriceResult> CosEngine::price_strip(std::span<const double> strikes) const {
    std::vector<PriceResult> out;
    out.reserve(strikes.size());
    for (double k : strikes) out.push_back(price_put(k));
    return out;
}

ShiftEquivalence shift_equivalence_check(const ModelParams& model, const OptionSpec& spec,
                                         int n, const TruncationRange& range) {
    validate(spec);
    const double z = std::log(spec.strike / spec.forward);
    if (!(range.a < z && z < range.b))
        throw ValidationError("shift_equivalence_check: need ln(K/F) inside (a, b)");
    TruncationRange shifted{range.a - z, range.b - z, range.level, range.used_c4};

    CosEngine engine(model, spec.forward, spec.discount, spec.maturity, n, range);
    const double improved = engine.price_put(spec.strike).price;
    const double classic = detail::classic_put_series(model, spec.forward, spec.strike,
                                                      spec.discount, spec.maturity, n, shifted);
    return {improved, classic};
}

}  // namespace cosp
