#pragma once

#include "cosp/models.hpp"

namespace cosp {

struct CumulantSet {
    double c1;
    double c2;  // >= 0 up to rounding
    double c4;  // exactly 0 for Black; jump part only for SVJ
    double maturity;
    ModelKind model;
};

// Interval [a, b] for the cosine expansion of the log-return density.
struct TruncationRange {
    double a;
    double b;
    double level;  // the L that generated it
    bool used_c4;

    double width() const { return b - a; }
};

double heston_c1(const HestonParams& p, double maturity);
double heston_c2(const HestonParams& p, double maturity);

// Sum of the two computer-algebra polynomials in (T, e^{-kT}). The kappa^4
// bracket of the theta part carries a -3 that the usual printed form drops;
// without it the value disagrees with the numerical CGF derivative by orders
// of magnitude (see tests).
double heston_c4(const HestonParams& p, double maturity);

CumulantSet black_cumulants(const BlackParams& p, double maturity);
CumulantSet heston_cumulants(const HestonParams& p, double maturity);

// c4 keeps the jump contribution only (the c4_H = 0 approximation); the
// Heston part is deliberately dropped so that the c4-adjusted range widens
// for the jump kurtosis alone.
CumulantSet svj_cumulants(const SvjParams& p, double maturity);

// Component-wise sums over the two legs.
CumulantSet double_heston_cumulants(const DoubleHestonParams& p, double maturity);

CumulantSet cumulants_for(const ModelParams& model, double maturity);

/**
 * a = c1 - L*w, b = c1 + L*w with w = sqrt(|c2|), or w = sqrt(c2 + sqrt(|c4|))
 * when use_c4 is set. Throws InvalidCumulantsError on non-finite cumulants or
 * L <= 0.
 */
TruncationRange truncation_range(const CumulantSet& c, double level, bool use_c4);

}  // namespace cosp
