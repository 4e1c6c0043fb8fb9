#include "cosp/error_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cosp/cos_classic.hpp"
#include "cosp/cos_improved.hpp"
#include "cosp/errors.hpp"
#include "cosp/quadrature.hpp"
#include "cosp/reference.hpp"

namespace cosp {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Fold y into [a, b] through the even periodic extension, so evaluating the
// series outside the interval is exact by construction.
double fold(double y, double a, double b) {
    const double w = b - a;
    double s = std::fmod(y - a, 2.0 * w);
    if (s < 0.0) s += 2.0 * w;
    if (s > w) s = 2.0 * w - s;
    return a + s;
}

// sum' coeffs[k] cos(k pi (y-a)/(b-a)) via a rotation recurrence.
double cos_series_eval(std::span<const double> coeffs, double a, double b, double y) {
    if (coeffs.empty()) return 0.0;
    const double yf = fold(y, a, b);
    const double theta = kPi * (yf - a) / (b - a);
    double sum = 0.5 * coeffs[0];
    cd rot = std::polar(1.0, theta);
    cd cur = rot;
    for (size_t k = 1; k < coeffs.size(); ++k) {
        sum += coeffs[k] * cur.real();
        cur *= rot;
    }
    return sum;
}

std::vector<double> density_coefficients(const ModelParams& model, double maturity, double a,
                                         double b, int n) {
    const double w = b - a;
    std::vector<double> coeffs(n);
    for (int k = 0; k < n; ++k) {
        const double eta = k * kPi / w;
        coeffs[k] = (2.0 / w) * (cf(model, eta, maturity) * std::polar(1.0, -eta * a)).real();
    }
    return coeffs;
}

}  // namespace

PayoffExpansion make_payoff_expansion(Centering centering, double strike, double forward,
                                      const TruncationRange& range, int m) {
    if (m < 1) throw ValidationError("make_payoff_expansion: m must be >= 1");
    if (!(strike > 0.0) || !(forward > 0.0))
        throw ValidationError("make_payoff_expansion: strike and forward must be > 0");
    PayoffExpansion exp;
    exp.a = range.a;
    exp.b = range.b;
    exp.centering = centering;
    exp.strike = strike;
    exp.forward = forward;
    exp.coeffs.resize(m);
    if (centering == Centering::StrikeRelative) {
        if (!(range.a < 0.0 && 0.0 < range.b))
            throw ValidationError("make_payoff_expansion: strike-relative coefficients need a < 0 < b");
        for (int k = 0; k < m; ++k) exp.coeffs[k] = vk_put_classic(k, strike, range.a, range.b);
    } else {
        const double z = std::log(strike / forward);
        const double zc = std::min(std::max(z, range.a), range.b);
        const double w = range.width();
        for (int k = 0; k < m; ++k)
            exp.coeffs[k] = (2.0 / w)
                            * (-forward * chi(k, range.a, zc, range.a, range.b)
                               + strike * psi(k, range.a, zc, range.a, range.b));
    }
    return exp;
}

double payoff_expansion_eval(const PayoffExpansion& exp, double y) {
    return cos_series_eval(exp.coeffs, exp.a, exp.b, y);
}

double payoff_value(const PayoffExpansion& exp, double y) {
    if (exp.centering == Centering::StrikeRelative)
        return exp.strike * std::max(1.0 - std::exp(y), 0.0);
    return std::max(exp.strike - exp.forward * std::exp(y), 0.0);
}

std::vector<PayoffErrorRow> payoff_error_profile(double strike, double forward,
                                                 const TruncationRange& range, int m,
                                                 std::span<const double> x_grid) {
    const PayoffExpansion classic =
        make_payoff_expansion(Centering::StrikeRelative, strike, forward, range, m);
    const PayoffExpansion improved =
        make_payoff_expansion(Centering::ForwardRelative, strike, forward, range, m);
    const double z = std::log(strike / forward);

    std::vector<PayoffErrorRow> rows;
    rows.reserve(x_grid.size());
    for (double x : x_grid) {
        PayoffErrorRow row;
        row.x = x;
        row.payoff = std::max(strike - forward * std::exp(x), 0.0);
        row.classic_expansion = payoff_expansion_eval(classic, x - z);
        row.improved_expansion = payoff_expansion_eval(improved, x);
        row.classic_error = row.payoff - row.classic_expansion;
        row.improved_error = row.payoff - row.improved_expansion;
        rows.push_back(row);
    }
    return rows;
}

SeriesTail series_tail(const ModelParams& model, double maturity, const TruncationRange& range,
                       int n_start, int n_max, std::span<const double> coeffs) {
    if (n_max < n_start) throw ValidationError("series_tail: n_max must be >= n_start");
    if (static_cast<int>(coeffs.size()) < n_max)
        throw ValidationError("series_tail: coefficient array shorter than n_max");
    const double w = range.width();

    double value = 0.0;
    for (int k = n_start; k < n_max; ++k) {
        const double eta = k * kPi / w;
        value += (cf(model, eta, maturity) * std::polar(1.0, -eta * range.a)).real() * coeffs[k];
    }

    double vmax = 0.0;
    for (int k = std::max(1, n_start); k < n_max; ++k)
        vmax = std::max(vmax, std::abs(coeffs[k]));
    if (n_max == n_start && !coeffs.empty())
        vmax = std::abs(coeffs[std::max(0, n_start - 1)]);

    double bound = 0.0;
    bool converged = false;
    for (int k = n_max; k < 16 * std::max(n_max, 64); ++k) {
        const double eta = k * kPi / w;
        const double term = std::abs(cf(model, eta, maturity)) * vmax;
        bound += term;
        if (term < 1e-6 * std::max(bound, 1e-300)) {
            converged = true;
            break;
        }
    }
    if (!converged) bound = std::numeric_limits<double>::infinity();
    return {value, bound};
}

ErrorDecomposition total_error_decomposition(const ModelParams& model, const OptionSpec& spec,
                                             Method method, int n, const TruncationRange& range,
                                             double ref_tol) {
    if (method == Method::Reference)
        throw ValidationError("total_error_decomposition: method must be classic or improved");
    validate(spec);
    const double F = spec.forward, K = spec.strike, T = spec.maturity;
    const double z = std::log(K / F);
    OptionSpec put_spec = spec;
    put_spec.kind = OptionKind::Put;

    // The classic method at strike K is the forward-centered formula on the
    // shifted window, so one decomposition path serves both.
    TruncationRange window = range;
    double method_price;
    if (method == Method::Classic) {
        window.a += z;
        window.b += z;
        method_price = price_put_classic(model, put_spec, n, range).price;
    } else {
        CosEngine engine(model, F, spec.discount, T, n, range);
        method_price = engine.price_put(K).price;
    }

    const double observed =
        method_price - price_reference(model, put_spec, ref_tol).price;

    const PayoffExpansion vhat =
        make_payoff_expansion(Centering::ForwardRelative, K, F, window, n);

    const int n_big = std::max(4 * n, 16384);
    const PayoffExpansion vhat_big =
        make_payoff_expansion(Centering::ForwardRelative, K, F, window, n_big);
    const double tail =
        spec.discount * series_tail(model, T, window, n, n_big, vhat_big.coeffs).value;

    // density recovered on an auxiliary range that extends well past the window
    const CumulantSet cum = cumulants_for(model, T);
    const double wu = range.used_c4 ? std::sqrt(cum.c2 + std::sqrt(std::abs(cum.c4)))
                                    : std::sqrt(std::abs(cum.c2));
    const double aux_a = std::min(cum.c1 - 20.0 * wu, window.a - 6.0 * wu);
    const double aux_b = std::max(cum.c1 + 20.0 * wu, window.b + 6.0 * wu);
    const int n_aux = 1 << 14;
    const std::vector<double> fhat = density_coefficients(model, T, aux_a, aux_b, n_aux);

    const auto integrand = [&](double x) {
        const double v = std::max(K - F * std::exp(x), 0.0);
        const double vh = payoff_expansion_eval(vhat, x);
        return (v - vh) * cos_series_eval(fhat, aux_a, aux_b, x);
    };
    const double tol_int =
        std::max(1e-15 * F, 1e-4 * (std::abs(observed) + std::abs(tail)));
    double payoff_term = 0.0;
    if (window.a > aux_a)
        payoff_term += integrate_adaptive(integrand, aux_a, window.a, 0.5 * tol_int).value;
    if (window.b < aux_b)
        payoff_term += integrate_adaptive(integrand, window.b, aux_b, 0.5 * tol_int).value;
    payoff_term *= spec.discount;

    return {payoff_term, tail, observed};
}

}  // namespace cosp
