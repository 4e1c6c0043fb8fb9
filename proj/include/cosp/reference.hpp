#pragma once

#include "cosp/char_fn.hpp"
#include "cosp/option.hpp"

namespace cosp {

// Lognormal closed form on the forward.
double black_price(double forward, double strike, double maturity, double sigma,
                   double discount, OptionKind kind);

/**
 * Independent high-accuracy pricer: Fourier inversion along the damped
 * contour u - i/2,
 *   C = B [ F - sqrt(FK)/pi * int_0^inf Re(e^{-ivz} phi(v - i/2)) / (v^2+1/4) dv ],
 * put through parity on the same integral. The contour sits inside the
 * moment strip for every martingale model, so no model-specific damping
 * search is needed. The integral is truncated where its envelope falls below
 * tol/10^3 and evaluated by adaptive quadrature with absolute target tol.
 *
 * tol must be >= 1e-12. Fails loudly (OracleConvergenceError) instead of
 * degrading when the node budget is exhausted.
 */
PriceResult price_reference(const ModelParams& model, const OptionSpec& spec, double tol);

/**
 * sigma such that black_price(sigma) = price, by bisection sharpened with
 * safeguarded Newton steps; the residual ends below 1e-12 * max(1, price).
 * Prices at or outside the no-arbitrage bounds throw NoSolutionError with
 * the offending bound flagged.
 */
double implied_vol(double price, double forward, double strike, double maturity,
                   double discount, OptionKind kind);

}  // namespace cosp
