#pragma once

#include <complex>

#include "cosp/models.hpp"

namespace cosp {

/**
 * Normalized characteristic function of the log forward return,
 *   phi(u) = E[exp(iu ln(F(T,T)/F(0,T)))].
 *
 * The martingale correction is built in, so phi(0) = 1 and phi(-i) = 1 for
 * every model. The Heston legs use the branch-stable formulation (the sign
 * convention that keeps the rational (beta - d) root), which stays continuous
 * in u well past Npi/(b-a) at N = 2^16.
 *
 * Complex arguments are accepted; the reference pricer evaluates along the
 * shifted contour u - i/2 and the cumulant oracle along the imaginary axis.
 */
std::complex<double> cf(const ModelParams& model, std::complex<double> u, double maturity);

// log phi(u) evaluated without the exp/log round trip. Same domain as cf().
std::complex<double> log_cf(const ModelParams& model, std::complex<double> u, double maturity);

/**
 * Numerical cumulant: the order-th derivative at u = 0 of
 *   g(u) = log(phi(-iu))
 * by central finite differences (Richardson-extrapolated for order 4) over a
 * ladder of step sizes, keeping the step pair that agrees best.
 *
 * order must be 1, 2 or 4. err_estimate, when given, receives the
 * disagreement of the selected step pair. Throws NumericalOverflowError when
 * no stencil evaluates to a finite positive phi(-iu); retrying that case by
 * hand needs a smaller step than the ladder floor.
 */
double cgf_derivative_numeric(const ModelParams& model, double maturity, int order,
                              double* err_estimate = nullptr);

}  // namespace cosp
