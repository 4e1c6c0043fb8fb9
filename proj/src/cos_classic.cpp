#include "cosp/cos_classic.hpp"

#include <cmath>
#include <numbers>

#include "cosp/errors.hpp"

namespace cosp {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void validate_inputs(const OptionSpec& spec, int n, const TruncationRange& range) {
    validate(spec);
    if (n < 2) throw ValidationError("cos pricing: n must be >= 2");
    if (!(range.a < range.b) || !std::isfinite(range.a) || !std::isfinite(range.b))
        throw ValidationError("cos pricing: invalid truncation range");
}

double clamp_tiny_negative(double p) {
    // Gibbs undershoot near the range edge may go slightly negative; keep
    // larger negatives visible.
    return (p < 0.0 && p >= -1e-12) ? 0.0 : p;
}

// (2/(b-a)) (-K chi + K psi) over the clamped ITM interval; same value as the
// closed form when a < 0 < b, and the defined degenerate limit otherwise.
double vk_put_classic_general(int k, double strike, double a, double b) {
    const double top = std::min(std::max(0.0, a), b);
    return (2.0 * strike / (b - a)) * (-chi(k, a, top, a, b) + psi(k, a, top, a, b));
}

}  // namespace

double chi(int k, double c, double d, double a, double b) {
    const double eta = k * kPi / (b - a);
    const double ed = std::exp(d), ec = std::exp(c);
    return (std::cos(eta * (d - a)) * ed - std::cos(eta * (c - a)) * ec
            + eta * (std::sin(eta * (d - a)) * ed - std::sin(eta * (c - a)) * ec))
           / (1.0 + eta * eta);
}

double psi(int k, double c, double d, double a, double b) {
    if (k == 0) return d - c;
    const double eta = k * kPi / (b - a);
    return (std::sin(eta * (d - a)) - std::sin(eta * (c - a))) / eta;
}

double vk_put_classic(int k, double strike, double a, double b) {
    const double w = b - a;
    if (k == 0) return (2.0 * strike / w) * (std::exp(a) - 1.0 - a);
    const double eta = k * kPi / w;
    return (2.0 * strike / w)
           * ((std::exp(a) + eta * std::sin(eta * a) - std::cos(eta * a)) / (1.0 + eta * eta)
              - std::sin(eta * a) / eta);
}

namespace detail {

double classic_put_series(const ModelParams& model, double forward, double strike,
                          double discount, double maturity, int n,
                          const TruncationRange& range) {
    const double a = range.a, b = range.b, w = b - a;
    const double x = std::log(strike / forward);
    const bool kink_inside = a < 0.0 && 0.0 < b;
    double sum = 0.5 * cf(model, 0.0, maturity).real()
                 * (kink_inside ? vk_put_classic(0, strike, a, b)
                                : vk_put_classic_general(0, strike, a, b));
    for (int k = 1; k < n; ++k) {
        const double eta = k * kPi / w;
        const double vk = kink_inside ? vk_put_classic(k, strike, a, b)
                                      : vk_put_classic_general(k, strike, a, b);
        const cd phase = std::polar(1.0, -eta * (x + a));
        sum += (cf(model, eta, maturity) * phase).real() * vk;
    }
    return discount * sum;
}

}  // namespace detail

PriceResult price_put_classic(const ModelParams& model, const OptionSpec& spec, int n,
                              const TruncationRange& range) {
    validate_inputs(spec, n, range);
    validate(model);
    const double x = std::log(spec.strike / spec.forward);
    if (x >= range.b) {
        return {spec.discount * std::max(spec.strike - spec.forward, 0.0), Method::Classic, n,
                range, Fallback::Intrinsic};
    }
    if (x <= range.a) {
        return {0.0, Method::Classic, n, range, Fallback::Zero};
    }
    double p = detail::classic_put_series(model, spec.forward, spec.strike, spec.discount,
                                          spec.maturity, n, range);
    return {clamp_tiny_negative(p), Method::Classic, n, range, Fallback::None};
}

PriceResult call_from_put(const PriceResult& put_result, const OptionSpec& spec) {
    PriceResult out = put_result;
    out.price = put_result.price + spec.discount * (spec.forward - spec.strike);
    return out;
}

PriceResult price_classic(const ModelParams& model, const OptionSpec& spec, int n,
                          const TruncationRange& range) {
    PriceResult put = price_put_classic(model, spec, n, range);
    return spec.kind == OptionKind::Put ? put : call_from_put(put, spec);
}

std::vector<PriceResult> price_strip_classic(const ModelParams& model, double forward,
                                             double discount, double maturity, int n,
                                             const TruncationRange& range,
                                             std::span<const double> strikes) {
    OptionSpec probe{forward, forward, maturity, discount, OptionKind::Put};
    validate_inputs(probe, n, range);
    validate(model);
    const double a = range.a, b = range.b, w = b - a;
    const bool kink_inside = a < 0.0 && 0.0 < b;

    std::vector<cd> phi(n);
    for (int k = 0; k < n; ++k) phi[k] = cf(model, k * kPi / w, maturity);

    // V_k/K is strike independent; only the phase varies per strike.
    std::vector<double> vk_unit(n);
    for (int k = 0; k < n; ++k)
        vk_unit[k] = kink_inside ? vk_put_classic(k, 1.0, a, b) : vk_put_classic_general(k, 1.0, a, b);

    std::vector<PriceResult> out;
    out.reserve(strikes.size());
    for (double strike : strikes) {
        if (!(strike > 0.0)) throw ValidationError("price_strip_classic: strike must be > 0");
        const double x = std::log(strike / forward);
        if (x >= b) {
            out.push_back({discount * std::max(strike - forward, 0.0), Method::Classic, n, range,
                           Fallback::Intrinsic});
            continue;
        }
        if (x <= a) {
            out.push_back({0.0, Method::Classic, n, range, Fallback::Zero});
            continue;
        }
        double sum = 0.5 * phi[0].real() * vk_unit[0];
        for (int k = 1; k < n; ++k) {
            const double eta = k * kPi / w;
            sum += (phi[k] * std::polar(1.0, -eta * (x + a))).real() * vk_unit[k];
        }
        out.push_back({clamp_tiny_negative(discount * strike * sum), Method::Classic, n, range,
                       Fallback::None});
    }
    return out;
}

}  // namespace cosp
