#pragma once

#include <Eigen/Core>

#include "rpmsim/rng.hpp"
#include "rpmsim/special_functions.hpp"

namespace rpmsim {

// Standard normal variate (Box-Muller, cosine form). Two uniforms per draw,
// no cached spare: every call is a pure function of the stream state.
double normal_sample(RngStream& rng);

// Unit-mean exponential variate by inversion.
double exponential_sample(RngStream& rng);

// Gamma(shape, rate 1) variate, shape > 0 (Marsaglia-Tsang; shape < 1 via the
// u^(1/shape) boost).
double gamma_sample(double shape, RngStream& rng);

// Beta(a, b) variate via two gammas, clamped to the open interval (0, 1).
double beta_sample(double a, double b, RngStream& rng);

// Inverse-Gaussian variate (Michael-Schucany-Haas transformation with
// rejection), exact in distribution, in an overflow-safe ratio form.
double ig_sample(const IGParams& params, RngStream& rng);

// Positive 1/2-stable variate with density (2 pi)^{-1/2} x^{-3/2} e^{-1/(2x)},
// generated as 1/W^2 for W standard normal.
double half_stable_sample(RngStream& rng);

// Ordered Poisson arrival times Gamma_1 < ... < Gamma_count (partial sums of
// i.i.d. unit-mean exponentials).
Eigen::ArrayXd gamma_arrivals(Eigen::Index count, RngStream& rng);

}  // namespace rpmsim
