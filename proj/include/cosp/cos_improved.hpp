#pragma once

#include <span>
#include <vector>

#include "cosp/char_fn.hpp"
#include "cosp/option.hpp"

namespace cosp {

/**
 * Forward-relative put payoff coefficient over [a, b], z = ln(K/F):
 *   V_0(z) = 2F (e^a - e^z + e^z (z-a)) / (b-a)
 *   V_k(z) = 2F/((b-a)(1+eta_k^2)) (e^a - cos(eta_k(z-a)) e^z
 *            - eta_k sin(eta_k(z-a)) e^z) + 2F/((b-a) eta_k) sin(eta_k(z-a)) e^z
 * Requires a <= z <= b; equals (2/(b-a)) (-F chi_k(a,z) + K psi_k(a,z)).
 */
double vk_put_improved(int k, double z, double forward, double a, double b);

/**
 * Per-(model, maturity, N, range) precomputation for the forward-centered
 * pricing formula. phi_terms[k] = Re[phi(k pi/(b-a)) e^{-i k pi a/(b-a)}]
 * is strike independent; pricing a strike afterwards costs O(N) real
 * multiply-adds plus the sin/cos inside V_k(z) and no CF evaluations.
 * Immutable once built.
 */
class CosEngine {
  public:
    CosEngine(const ModelParams& model, double forward, double discount, double maturity,
              int n, const TruncationRange& range);

    // P = B [ 1/2 phi_terms[0] V_0(z) + sum_k phi_terms[k] V_k(z) ].
    // z < a prices to 0, z > b to the discounted intrinsic value; both
    // boundaries price formulaically.
    PriceResult price_put(double strike) const;

    PriceResult price(double strike, OptionKind kind) const;

    // Element-wise price_put; one engine build serves the whole strip.
    std::vector<PriceResult> price_strip(std::span<const double> strikes) const;

    const std::vector<double>& phi_terms() const { return phi_terms_; }
    const TruncationRange& range() const { return range_; }
    const ModelParams& model() const { return model_; }
    double forward() const { return forward_; }
    double discount() const { return discount_; }
    double maturity() const { return maturity_; }
    int n() const { return static_cast<int>(phi_terms_.size()); }

  private:
    ModelParams model_;
    double forward_;
    double discount_;
    double maturity_;
    TruncationRange range_;
    std::vector<double> phi_terms_;
};

struct ShiftEquivalence {
    double improved;
    double shifted_classic;
};

/**
 * The central identity of the forward-centered formula: its price on [a, b]
 * equals the classic formula's on [a - z, b - z]. Both sides are evaluated
 * through their series (no out-of-range cutoffs) so the identity is checkable
 * for any z inside (a, b).
 */
ShiftEquivalence shift_equivalence_check(const ModelParams& model, const OptionSpec& spec,
                                         int n, const TruncationRange& range);

}  // namespace cosp
