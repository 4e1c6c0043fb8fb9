#include "cosp/cumulants.hpp"

#include <cmath>

#include "cosp/errors.hpp"

namespace cosp {

double heston_c1(const HestonParams& p, double t) {
    return (1.0 - std::exp(-p.kappa * t)) * (p.theta - p.v0) / (2.0 * p.kappa)
           - 0.5 * p.theta * t;
}

double heston_c2(const HestonParams& p, double t) {
    const double k = p.kappa, s = p.sigma, r = p.rho;
    const double e = std::exp(-k * t);
    const double e2 = std::exp(-2.0 * k * t);
    const double k3 = k * k * k;
    const double va = p.v0 / (4.0 * k3)
                      * (4.0 * k * k * (1.0 + (r * s * t - 1.0) * e)
                         + k * (4.0 * r * s * (e - 1.0) - 2.0 * s * s * t * e)
                         + s * s * (1.0 - e2));
    const double vb = p.theta / (8.0 * k3)
                      * (8.0 * k3 * t
                         - 8.0 * k * k * (1.0 + r * s * t + (r * s * t - 1.0) * e)
                         + 2.0 * k * ((1.0 + 2.0 * e) * s * s * t + 8.0 * (1.0 - e) * r * s)
                         + s * s * (e2 + 4.0 * e - 5.0));
    return va + vb;
}

double heston_c4(const HestonParams& p, double t) {
    const double k = p.kappa, s = p.sigma, r = p.rho;
    const double e1 = std::exp(-k * t);
    const double e2 = std::exp(-2.0 * k * t);
    const double e3 = std::exp(-3.0 * k * t);
    const double e4 = std::exp(-4.0 * k * t);
    const double k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, k6 = k5 * k, k7 = k6 * k;
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    const double r2 = r * r, r3 = r2 * r;
    const double t2 = t * t, t3 = t2 * t;

    // v0 part
    const double eB1 = (t3 * r3 * s - 3.0 * t2 * r2) * k6
                       - 1.5 * t * (t2 * r2 * s2 - 2.0 * t * r * (r2 + 2.0) * s + 4.0 * r2 + 2.0) * k5
                       + (0.75 * t3 * r * s3 - 6.0 * t2 * (r2 + 0.375) * s2
                          + 6.0 * t * r * (r2 + 2.0) * s - 6.0 * r2) * k4
                       - 0.125 * s * (t3 * s3 - 24.0 * t2 * r * s2
                                      + (72.0 * t * r2 + 18.0 * t) * s - 48.0 * r3) * k3
                       - 0.375 * s2 * (t2 * s2 - 7.0 * t * s * r - 3.0) * k2
                       - (3.0 / 16.0) * s3 * (t * s + 10.0 * r) * k
                       + 0.375 * s4;
    const double eB2 = (-1.5 - 3.0 * t2 * r2 * s2 + 6.0 * t * s * r) * k4
                       + 3.0 * s * (t2 * r * s2 + (-3.0 * t * r2 - 1.5 * t) * s + 3.0 * r) * k3
                       - 0.75 * s2 * (t2 * s2 - 10.0 * t * s * r + 12.0 * r2 + 3.0) * k2
                       - (9.0 * t * s - 30.0 * r) * s3 * k / 8.0
                       - 0.375 * s4;
    const double eB3 = (9.0 / 8.0) * s2
                       * ((t * s * r - 1.0) * k2 + (-0.5 * s2 * t + (5.0 / 3.0) * r * s) * k
                          - s2 / 3.0);
    const double eB4 = -(3.0 / 32.0) * s4;
    const double eB0 = -6.0 * (k * r * s - 0.25 * s2 - k2)
                       * ((r2 + 0.25) * k2 - 1.25 * k * r * s + (5.0 / 16.0) * s2);
    const double c4B = (2.0 * s2 * p.v0 / k7) * (eB1 * e1 + eB2 * e2 + eB3 * e3 + eB4 * e4 + eB0);

    // theta part; the -3.0 in the k^4 bracket restores agreement with the
    // numerical CGF derivative (the usual printed form drops it)
    const double eA1 = (t3 * r3 * s - 3.0 * t2 * r2) * k6
                       - 1.5 * t * (t2 * r2 * s2 - 4.0 * t * r * (r2 + 1.0) * s + 8.0 * r2 + 2.0) * k5
                       + (0.75 * t3 * r * s3 - 10.5 * t2 * (r2 + 3.0 / 14.0) * s2
                          + (18.0 * t * r3 + 24.0 * t * r) * s - 18.0 * r2 - 3.0) * k4
                       - 0.125 * (t3 * s3 - 42.0 * t2 * r * s2 + (240.0 * t * r2 + 54.0 * t) * s
                                  - 192.0 * r3 - 192.0 * r) * s * k3
                       - 0.75 * s2 * (t2 * s2 - 17.5 * t * s * r + 40.0 * r2 + 7.5) * k2
                       - (27.0 * s3 * k / 16.0) * (t * s - 20.0 * r / 3.0)
                       - (21.0 / 16.0) * s4;
    const double eA2 = (-0.75 - 1.5 * t2 * r2 * s2 + 3.0 * t * s * r) * k4
                       + 1.5 * s * (t2 * r * s2 + (-4.0 * t * r2 - 1.5 * t) * s + 4.0 * r) * k3
                       - 0.375 * s2 * (t2 * s2 - 14.0 * t * s * r + 20.0 * r2 + 6.0) * k2
                       + (-(15.0 / 16.0) * t * s4 + 4.5 * r * s3) * k
                       - (21.0 / 32.0) * s4;
    const double eA3 = 0.375 * s2
                       * ((t * s * r - 1.0) * k2 + (-0.5 * s2 * t + 2.0 * r * s) * k - 0.5 * s2);
    const double eA4 = -(3.0 / 128.0) * s4;
    const double eA0 = (-1.5 * t - 6.0 * t * r2) * k5
                       + ((6.0 * t * r3 + 9.0 * t * r) * s + 18.0 * r2 + 3.75) * k4
                       - 9.0 * s * (t * (r2 + 0.25) * s + (8.0 / 3.0) * r3 + (10.0 / 3.0) * r) * k3
                       + (15.0 * s2 * k2 / 4.0) * (t * s * r + 10.0 * r2 + 2.2)
                       + (-(33.0 / 2.0) * r * s3 - (15.0 / 32.0) * t * s4) * k
                       + (279.0 / 128.0) * s4;
    const double c4A = -(2.0 * s2 * p.theta / k7) * (eA1 * e1 + eA2 * e2 + eA3 * e3 + eA4 * e4 + eA0);

    return c4A + c4B;
}

CumulantSet black_cumulants(const BlackParams& p, double t) {
    return {-0.5 * p.sigma * p.sigma * t, p.sigma * p.sigma * t, 0.0, t, ModelKind::Black};
}

CumulantSet heston_cumulants(const HestonParams& p, double t) {
    return {heston_c1(p, t), heston_c2(p, t), heston_c4(p, t), t, ModelKind::Heston};
}

CumulantSet svj_cumulants(const SvjParams& p, double t) {
    const double alpha = std::log1p(p.kbar) - 0.5 * p.delta * p.delta;
    const double lt = p.lambda * t;
    const double a2 = alpha * alpha, d2 = p.delta * p.delta;
    return {heston_c1(p.heston, t) + (alpha - p.kbar) * lt,
            heston_c2(p.heston, t) + (a2 + d2) * lt,
            (a2 * a2 + 6.0 * d2 * a2 + 3.0 * d2 * d2) * lt,
            t, ModelKind::Svj};
}

CumulantSet double_heston_cumulants(const DoubleHestonParams& p, double t) {
    return {heston_c1(p.leg1, t) + heston_c1(p.leg2, t),
            heston_c2(p.leg1, t) + heston_c2(p.leg2, t),
            heston_c4(p.leg1, t) + heston_c4(p.leg2, t),
            t, ModelKind::DoubleHeston};
}

CumulantSet cumulants_for(const ModelParams& model, double t) {
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BlackParams>) return black_cumulants(p, t);
            else if constexpr (std::is_same_v<T, HestonParams>) return heston_cumulants(p, t);
            else if constexpr (std::is_same_v<T, SvjParams>) return svj_cumulants(p, t);
            else return double_heston_cumulants(p, t);
        },
        model);
}

TruncationRange truncation_range(const CumulantSet& c, double level, bool use_c4) {
    if (!std::isfinite(c.c1) || !std::isfinite(c.c2) || !std::isfinite(c.c4))
        throw InvalidCumulantsError("truncation_range: non-finite cumulants");
    if (!(level > 0.0)) throw InvalidCumulantsError("truncation_range: level must be > 0");
    const double w = use_c4 ? std::sqrt(c.c2 + std::sqrt(std::abs(c.c4)))
                            : std::sqrt(std::abs(c.c2));
    TruncationRange r{c.c1 - level * w, c.c1 + level * w, level, use_c4};
    if (!(r.a < r.b) || !std::isfinite(r.a) || !std::isfinite(r.b))
        throw InvalidCumulantsError("truncation_range: degenerate interval");
    return r;
}

}  // namespace cosp
