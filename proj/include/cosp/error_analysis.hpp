#pragma once

#include <span>
#include <vector>

#include "cosp/char_fn.hpp"
#include "cosp/option.hpp"

namespace cosp {

enum class Centering { StrikeRelative, ForwardRelative };

/**
 * Cosine expansion of a put payoff over [a, b]. StrikeRelative carries the
 * classic coefficients for y = ln(S/K); ForwardRelative the improved ones for
 * y = ln(S/F) (strikes beyond the range clamp to the nearer edge, which is
 * the full- or empty-interval integral).
 */
struct PayoffExpansion {
    std::vector<double> coeffs;
    double a;
    double b;
    Centering centering;
    double strike;
    double forward;
};

PayoffExpansion make_payoff_expansion(Centering centering, double strike, double forward,
                                      const TruncationRange& range, int m);

// Partial sum with the k = 0 term half-weighted; periodic outside [a, b].
double payoff_expansion_eval(const PayoffExpansion& exp, double y);

// The payoff itself in the expansion's own coordinate.
double payoff_value(const PayoffExpansion& exp, double y);

struct PayoffErrorRow {
    double x;  // log-return relative to the forward
    double payoff;
    double classic_expansion;
    double improved_expansion;
    double classic_error;
    double improved_error;
};

/**
 * v - vhat for both centerings of one option, tabulated on a grid of
 * forward-relative log returns. The classic expansion lives in y = x - z, so
 * its effective window is the strike-shifted [a + z, b + z]; evaluating both
 * conventions on a common x grid shows the classic window sliding off the
 * density when the strike leaves the range.
 */
std::vector<PayoffErrorRow> payoff_error_profile(double strike, double forward,
                                                 const TruncationRange& range, int m,
                                                 std::span<const double> x_grid);

struct SeriesTail {
    double value;           // sum_{k=n_start}^{n_max-1} Re[phi(eta_k)e^{-i eta_k a}] V_k
    double remainder_bound; // |phi|-decay bound on the dropped k >= n_max part
};

SeriesTail series_tail(const ModelParams& model, double maturity, const TruncationRange& range,
                       int n_start, int n_max, std::span<const double> coeffs);

struct ErrorDecomposition {
    double payoff_term;    // int_{R \ [a,b]} (v - vhat) f, density recovered by COS
    double tail_term;      // series truncation beyond N
    double observed_error; // COS price minus reference
};

/**
 * Splits the COS pricing error at one strike into the payoff-approximation
 * term and the series tail. The classic method is mapped onto its equivalent
 * forward-centered window [a + z, b + z] first, so one decomposition path
 * serves both methods. The density is recovered on an auxiliary range wide
 * enough to cover the pricing window (L = 20, N = 2^14).
 */
ErrorDecomposition total_error_decomposition(const ModelParams& model, const OptionSpec& spec,
                                             Method method, int n, const TruncationRange& range,
                                             double ref_tol = 1e-10);

}  // namespace cosp
