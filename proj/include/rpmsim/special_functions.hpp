#pragma once

namespace rpmsim {

// log Gamma(x) for x > 0 (Lanczos).
double ln_gamma(double x);

// Standard normal CDF, full double accuracy via erfc.
double normal_cdf(double z);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Upper incomplete gamma integral for negative order -2:
//   Gamma(-2, x) = Integral_x^inf t^-3 e^-t dt, x > 0.
// Only a = -2 is supported; other orders raise DomainError.
double upper_incomplete_gamma(double a, double x);

// e^x * Gamma(-2, x): the overflow-free combination needed by xi() for large x.
double upper_incomplete_gamma_m2_scaled(double x);

// xi(theta) = 1 / (theta^2 e^theta Gamma(-2, theta)); behaves like theta for
// large theta.
double xi(double theta);

// Quantile of Gamma(shape, rate 1) by monotone bisection in log space on
// gamma_p. Throws NumericError if the quantile is below the smallest positive
// double (never returns a silent zero).
double gamma_quantile(double shape, double p);

// Regularized incomplete beta I_x(a, b); clamps x <= 0 -> 0 and x >= 1 -> 1.
double beta_cdf(double a, double b, double x);

// Inverse-Gaussian parameters in the convolution parametrization: density
//   (delta / sqrt(2 pi)) t^{-3/2} exp(-(delta^2/t + gamma^2 t)/2 + delta gamma),
// mean delta/gamma. In mean/shape terms mu = delta/gamma, lambda = delta^2.
struct IGParams {
    double delta;
    double gamma_rate;
};

// Inverse-Gaussian CDF at t (closed form via the normal CDF).
double ig_cdf(const IGParams& params, double t);

// Inverse-Gaussian quantile by monotone bisection in log space on ig_cdf.
double ig_quantile(const IGParams& params, double p);

}  // namespace rpmsim
