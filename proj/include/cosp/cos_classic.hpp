#pragma once

#include <span>
#include <vector>

#include "cosp/char_fn.hpp"
#include "cosp/option.hpp"

namespace cosp {

// chi_k(c,d) = int_c^d e^y cos(k pi (y-a)/(b-a)) dy, closed form.
double chi(int k, double c, double d, double a, double b);

// psi_k(c,d) = int_c^d cos(k pi (y-a)/(b-a)) dy, closed form (d-c for k = 0).
double psi(int k, double c, double d, double a, double b);

/**
 * Strike-relative put payoff coefficient over [a, b]:
 *   V_0 = (2K/(b-a)) (e^a - 1 - a)
 *   V_k = (2K/(b-a)) [ (e^a + eta_k sin(eta_k a) - cos(eta_k a))/(1 + eta_k^2)
 *                      - sin(eta_k a)/eta_k ]
 * Requires the payoff kink inside the range, a < 0 < b. Identical to
 * (2K/(b-a)) (-chi_k(a,0) + psi_k(a,0)).
 */
double vk_put_classic(int k, double strike, double a, double b);

/**
 * Original COS put price with strike-relative coefficients:
 *   P = B [ 1/2 Re(phi(0)) V_0 + sum_k Re(phi(eta_k) e^{i eta_k (-x-a)}) V_k ],
 * x = ln(K/F). Outside the range the formula no longer applies: x >= b
 * returns the discounted intrinsic value, x <= a returns 0. Tiny negative
 * sums (>= -1e-12) are clamped to 0; anything more negative is surfaced
 * as computed.
 */
PriceResult price_put_classic(const ModelParams& model, const OptionSpec& spec, int n,
                              const TruncationRange& range);

// C = P + B (F - K).
PriceResult call_from_put(const PriceResult& put_result, const OptionSpec& spec);

// Prices spec.kind: the put directly, or the call through parity.
PriceResult price_classic(const ModelParams& model, const OptionSpec& spec, int n,
                          const TruncationRange& range);

// Put prices for many strikes of one maturity. phi(eta_k) is evaluated once
// and reused, so the per-strike cost matches the improved engine's.
std::vector<PriceResult> price_strip_classic(const ModelParams& model, double forward,
                                             double discount, double maturity, int n,
                                             const TruncationRange& range,
                                             std::span<const double> strikes);

namespace detail {
// The bare series value without the out-of-range cutoffs; the shift
// equivalence check needs it when the shifted x lands beyond a/2 or b/2.
double classic_put_series(const ModelParams& model, double forward, double strike,
                          double discount, double maturity, int n,
                          const TruncationRange& range);
}  // namespace detail

}  // namespace cosp
