#pragma once

namespace tdimc {

// Gaussian tail probability Q(x) = P(Z > x) for standard normal Z.
double q_function(double x);

// Standard normal CDF.
double normal_cdf(double x);

// Inverse standard normal CDF (probit). p must be in (0, 1).
double inverse_normal_cdf(double p);

}  // namespace tdimc
