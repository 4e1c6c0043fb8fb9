#include "cosp/reference.hpp"

#include <cmath>
#include <numbers>

#include "cosp/errors.hpp"
#include "cosp/quadrature.hpp"

namespace cosp {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

double black_price(double forward, double strike, double maturity, double sigma,
                   double discount, OptionKind kind) {
    if (!(forward > 0.0) || !(strike > 0.0) || !(maturity > 0.0) || sigma < 0.0 ||
        !(discount > 0.0) || discount > 1.0)
        throw ValidationError("black_price: invalid inputs");
    const double sq = sigma * std::sqrt(maturity);
    if (sq < 1e-14) {
        const double fwd = forward - strike;
        return discount * (kind == OptionKind::Put ? std::max(-fwd, 0.0) : std::max(fwd, 0.0));
    }
    const double d1 = (std::log(forward / strike) + 0.5 * sq * sq) / sq;
    const double d2 = d1 - sq;
    if (kind == OptionKind::Put)
        return discount * (strike * norm_cdf(-d2) - forward * norm_cdf(-d1));
    return discount * (forward * norm_cdf(d1) - strike * norm_cdf(d2));
}

PriceResult price_reference(const ModelParams& model, const OptionSpec& spec, double tol) {
    validate(spec);
    validate(model);
    if (!(tol >= 1e-12)) throw ValidationError("price_reference: tol must be >= 1e-12");

    const double F = spec.forward, K = spec.strike, B = spec.discount, T = spec.maturity;
    const double z = std::log(K / F);
    const double scale = B * std::sqrt(F * K) / kPi;

    const auto integrand = [&](double v) {
        const cd phi = cf(model, cd(v, -0.5), T);
        return (std::exp(cd(0.0, -v * z)) * phi).real() / (v * v + 0.25);
    };

    // truncate where the |phi| envelope is three decades under tol
    const double threshold = tol * 1e-3 / scale;
    double cutoff = 1.0;
    bool found = false;
    while (cutoff < 1e9) {
        const double e1 = std::abs(cf(model, cd(cutoff, -0.5), T)) / (cutoff * cutoff + 0.25);
        const double e2 =
            std::abs(cf(model, cd(1.5 * cutoff, -0.5), T)) / (2.25 * cutoff * cutoff + 0.25);
        if (e1 < threshold && e2 < threshold) {
            found = true;
            break;
        }
        cutoff *= 2.0;
    }
    if (!found) throw OracleConvergenceError("price_reference: integrand envelope never decayed");

    QuadResult q = integrate_adaptive(integrand, 0.0, 2.0 * cutoff, 0.25 * tol / scale);

    const double time_value = scale * q.value;
    double price = (spec.kind == OptionKind::Put) ? B * K - time_value : B * F - time_value;
    if (price < 0.0 && price >= -std::max(1e-12, 10.0 * tol)) price = 0.0;

    TruncationRange domain{0.0, 2.0 * cutoff, 0.0, false};
    return {price, Method::Reference, static_cast<int>(q.evaluations), domain, Fallback::None};
}

double implied_vol(double price, double forward, double strike, double maturity,
                   double discount, OptionKind kind) {
    if (!(forward > 0.0) || !(strike > 0.0) || !(maturity > 0.0) || !(discount > 0.0) ||
        discount > 1.0 || !std::isfinite(price))
        throw ValidationError("implied_vol: invalid inputs");
    const double intrinsic = discount * (kind == OptionKind::Put
                                             ? std::max(strike - forward, 0.0)
                                             : std::max(forward - strike, 0.0));
    const double upper = discount * (kind == OptionKind::Put ? strike : forward);
    if (price <= intrinsic)
        throw NoSolutionError("implied_vol: price at or below the intrinsic lower bound", true);
    if (price >= upper)
        throw NoSolutionError("implied_vol: price at or above the upper bound", false);

    const auto bp = [&](double sig) {
        return black_price(forward, strike, maturity, sig, discount, kind);
    };

    double lo = 0.0, hi = 1.0;
    while (bp(hi) < price) {
        hi *= 2.0;
        if (hi > 1e6) throw NoSolutionError("implied_vol: no bracket below sigma = 1e6", false);
    }

    const double res_tol = 1e-12 * std::max(1.0, price);
    double sig = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        const double val = bp(sig);
        if (val > price) hi = sig; else lo = sig;
        // Newton step from the bisection point when vega cooperates
        const double sq = sig * std::sqrt(maturity);
        const double d1 = (std::log(forward / strike) + 0.5 * sq * sq) / sq;
        const double vega = discount * forward * std::sqrt(maturity)
                            * std::exp(-0.5 * d1 * d1) / std::sqrt(2.0 * kPi);
        double next = 0.5 * (lo + hi);
        if (vega > 1e-300) {
            const double newton = sig - (val - price) / vega;
            if (newton > lo && newton < hi) next = newton;
        }
        if (std::abs(val - price) <= res_tol && hi - lo <= 1e-13 * std::max(1.0, sig)) return sig;
        if (hi - lo <= 2e-16 * std::max(1.0, sig)) return sig;
        sig = next;
    }
    return sig;
}

}  // namespace cosp
