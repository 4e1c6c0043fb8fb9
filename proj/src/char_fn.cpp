#include "cosp/char_fn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cosp/errors.hpp"

namespace cosp {

namespace {

using cd = std::complex<double>;

// log(1 + w) accurate for small |w|.
cd clog1p(cd w) {
    double x = w.real(), y = w.imag();
    if (std::abs(x) > 0.5 || std::abs(y) > 0.5) return std::log(1.0 + w);
    return cd(0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x));
}

cd black_log_cf(const BlackParams& p, cd u, double t) {
    return -0.5 * p.sigma * p.sigma * t * (u * u + cd(0.0, 1.0) * u);
}

/**
 * Heston exponent C + D v0 with the stable root: d carries Re(d) >= 0 and the
 * (beta - d) factor is rationalized to -sigma^2 q / (beta + d), which keeps
 * full relative accuracy for the tiny arguments the cumulant oracle uses.
 */
cd heston_log_cf(const HestonParams& p, cd u, double t) {
    const cd iu = cd(0.0, 1.0) * u;
    const cd q = iu + u * u;
    if (q == cd(0.0, 0.0)) return cd(0.0, 0.0);  // u = 0 and u = -i: phi = 1
    if (p.sigma == 0.0) {
        // deterministic variance path
        double var = p.theta * t + (p.v0 - p.theta) * (1.0 - std::exp(-p.kappa * t)) / p.kappa;
        return -0.5 * var * q;
    }
    const double s2 = p.sigma * p.sigma;
    const cd beta = p.kappa - p.rho * p.sigma * iu;
    const cd d = std::sqrt(beta * beta + s2 * q);
    const cd bmd = -s2 * q / (beta + d);  // beta - d without cancellation
    const cd g = bmd / (beta + d);
    const cd emdt = std::exp(-d * t);
    const cd lg = clog1p(-g * emdt) - clog1p(-g);
    const cd C = (p.kappa * p.theta / s2) * (bmd * t - 2.0 * lg);
    const cd D = (bmd / s2) * (1.0 - emdt) / (1.0 - g * emdt);
    return C + D * p.v0;
}

cd svj_log_cf(const SvjParams& p, cd u, double t) {
    const cd iu = cd(0.0, 1.0) * u;
    const double alpha = std::log1p(p.kbar) - 0.5 * p.delta * p.delta;
    // compound Poisson with lognormal jumps, compensated so phi(-i) stays 1
    const cd jump = p.lambda * t * (std::exp(iu * alpha - 0.5 * p.delta * p.delta * u * u) - 1.0)
                    - iu * (p.lambda * p.kbar * t);
    return heston_log_cf(p.heston, u, t) + jump;
}

}  // namespace

std::complex<double> log_cf(const ModelParams& model, std::complex<double> u, double maturity) {
    return std::visit(
        [&](const auto& p) -> cd {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BlackParams>) return black_log_cf(p, u, maturity);
            else if constexpr (std::is_same_v<T, HestonParams>) return heston_log_cf(p, u, maturity);
            else if constexpr (std::is_same_v<T, SvjParams>) return svj_log_cf(p, u, maturity);
            else return heston_log_cf(p.leg1, u, maturity) + heston_log_cf(p.leg2, u, maturity);
        },
        model);
}

std::complex<double> cf(const ModelParams& model, std::complex<double> u, double maturity) {
    cd val = std::exp(log_cf(model, u, maturity));
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
        std::ostringstream oss;
        oss << "cf overflow at u=(" << u.real() << "," << u.imag() << "), T=" << maturity;
        throw NumericalOverflowError(oss.str());
    }
    return val;
}

namespace {

// g(u) = log phi(-iu) for real u; rejects stencil points past a moment
// explosion (non-finite or no longer real positive).
double cgf_eval(const ModelParams& model, double t, double u) {
    cd val = log_cf(model, cd(0.0, -u), t);
    if (!std::isfinite(val.real()) ||
        std::abs(val.imag()) > 1e-8 * std::max(1.0, std::abs(val.real()))) {
        throw NumericalOverflowError("cgf stencil left the moment strip");
    }
    return val.real();
}

}  // namespace

double cgf_derivative_numeric(const ModelParams& model, double maturity, int order,
                              double* err_estimate) {
    if (order != 1 && order != 2 && order != 4)
        throw ValidationError("cgf_derivative_numeric: order must be 1, 2 or 4");
    const auto g = [&](double u) { return cgf_eval(model, maturity, u); };

    const auto estimate = [&](double h) -> double {
        if (order == 1)
            return (g(-2 * h) - 8 * g(-h) + 8 * g(h) - g(2 * h)) / (12 * h);
        if (order == 2)  // g(0) = 0 exactly, its stencil weight drops out
            return (-g(-2 * h) + 16 * g(-h) + 16 * g(h) - g(2 * h)) / (12 * h * h);
        const auto d4 = [&](double hh) {
            return (g(-2 * hh) - 4 * g(-hh) - 4 * g(hh) + g(2 * hh)) / (hh * hh * hh * hh);
        };
        return (16 * d4(0.5 * h) - d4(h)) / 15.0;
    };

    // Ladder of steps; the widest stencil point is 0.3, inside the moment
    // strip of every martingale model at these horizons. Levels that explode
    // are skipped; among the rest the adjacent pair agreeing best wins.
    constexpr int levels = 14;
    constexpr double h_top = 0.15;
    double vals[levels];
    bool valid[levels];
    int n_valid = 0;
    for (int i = 0; i < levels; ++i) {
        double h = h_top * std::pow(0.5, i);
        try {
            vals[i] = estimate(h);
            valid[i] = std::isfinite(vals[i]);
        } catch (const NumericalOverflowError&) {
            valid[i] = false;
        }
        n_valid += valid[i];
    }
    if (n_valid == 0)
        throw NumericalOverflowError(
            "cgf_derivative_numeric: every stencil overflowed; a smaller step than the "
            "ladder floor would be needed");

    double best = std::numeric_limits<double>::quiet_NaN();
    double best_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < levels; ++i) {
        if (!valid[i] || !valid[i + 1]) continue;
        double gap = std::abs(vals[i] - vals[i + 1]);
        if (gap < best_gap) {
            best_gap = gap;
            best = vals[i + 1];
        }
    }
    if (!std::isfinite(best)) {  // a single valid level, no pair to compare
        for (int i = 0; i < levels; ++i)
            if (valid[i]) { best = vals[i]; best_gap = std::abs(best); break; }
    }
    if (err_estimate) *err_estimate = best_gap;
    return best;
}

}  // namespace cosp
