#pragma once

#include <functional>

namespace cosp {

struct QuadResult {
    double value;
    double abs_error;  // sum of per-panel estimates
    long evaluations;
};

/**
 * Adaptive Gauss-Legendre integration: each panel is estimated with 20- and
 * 41-point rules, the worst panel (by |G41 - G20|) is bisected until the
 * summed estimate drops below abs_tol. Throws OracleConvergenceError when the
 * evaluation budget runs out first.
 */
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double abs_tol, long max_evaluations = 4000000);

}  // namespace cosp
