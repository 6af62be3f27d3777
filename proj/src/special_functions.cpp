#include "rpmsim/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rpmsim/errors.hpp"

namespace rpmsim {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kInvSqrt2 = 0.70710678118654752440;
// log of the smallest positive double, rounded inward: e^-744 is still
// representable (denormal), e^-745 is not reliably so.
constexpr double kLogTiny = -744.0;

double gser(const double a, const double x) {
    const double gln = ln_gamma(a);
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            return sum * std::exp(-x + a * std::log(x) - gln);
        }
    }
    throw NumericError("incomplete gamma series did not converge");
}

// Modified Lentz evaluation of the continued fraction H(a, x) with
// Gamma(a, x) = e^-x x^a H(a, x); valid for x on the large side of a and,
// unlike the regularized form, also for negative a.
double lentz_upper_cf(const double a, const double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= kEps) return h;
    }
    throw NumericError("incomplete gamma continued fraction did not converge");
}

// E1(x) by the alternating power series; adequate below x ~ 1.5 where the
// continued fraction branch takes over.
double expint_e1_series(const double x) {
    double term = 1.0;  // (-x)^k / k!
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        term *= -x / k;
        sum -= term / k;
        if (std::fabs(term / k) < kEps * (std::fabs(sum) + 1.0)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
}

// ln(erfc(y)/2) without underflow for large positive y.
double log_half_erfc(const double y) {
    if (y < 25.0) {
        return std::log(0.5 * std::erfc(y));
    }
    const double y2 = y * y;
    const double inv = 1.0 / (2.0 * y2);
    const double corr = std::log1p(-inv * (1.0 - 3.0 * inv * (1.0 - 5.0 * inv)));
    return -y2 - std::log(2.0 * y) - 0.5 * std::log(M_PI) + corr;
}

double betacf(const double a, const double b, const double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 10000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) return h;
    }
    throw NumericError("incomplete beta continued fraction did not converge");
}

}  // namespace

double ln_gamma(const double x) {
    // Lanczos approximation, g = 671/128 with 14 coefficients.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double normal_cdf(const double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double gamma_p(const double a, const double x) {
    if (!(a > 0.0)) throw DomainError("gamma_p: shape must be positive");
    if (!(x >= 0.0)) throw DomainError("gamma_p: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gser(a, x);
    return 1.0 -
           std::exp(-x + a * std::log(x) - ln_gamma(a)) * lentz_upper_cf(a, x);
}

double gamma_q(const double a, const double x) {
    if (!(a > 0.0)) throw DomainError("gamma_q: shape must be positive");
    if (!(x >= 0.0)) throw DomainError("gamma_q: argument must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gser(a, x);
    return std::exp(-x + a * std::log(x) - ln_gamma(a)) * lentz_upper_cf(a, x);
}

double upper_incomplete_gamma(const double a, const double x) {
    if (a != -2.0) {
        throw DomainError(
            "upper_incomplete_gamma: only order -2 is implemented");
    }
    if (!(x > 0.0)) {
        throw DomainError("upper_incomplete_gamma: argument must be positive");
    }
    if (x < 1.5) {
        // Recurrence down from Gamma(0, x) = E1(x):
        //   Gamma(-2, x) = (E1(x) + e^-x (1 - x) / x^2) / 2.
        return 0.5 *
               (expint_e1_series(x) + std::exp(-x) * (1.0 - x) / (x * x));
    }
    return std::exp(-x) / (x * x) * lentz_upper_cf(-2.0, x);
}

double upper_incomplete_gamma_m2_scaled(const double x) {
    if (!(x > 0.0)) {
        throw DomainError(
            "upper_incomplete_gamma_m2_scaled: argument must be positive");
    }
    if (x < 1.5) {
        return std::exp(x) * upper_incomplete_gamma(-2.0, x);
    }
    return lentz_upper_cf(-2.0, x) / (x * x);
}

double xi(const double theta) {
    if (!(theta > 0.0)) throw DomainError("xi: theta must be positive");
    return 1.0 / (theta * theta * upper_incomplete_gamma_m2_scaled(theta));
}

double gamma_quantile(const double shape, const double p) {
    if (!(shape > 0.0)) {
        throw DomainError("gamma_quantile: shape must be positive");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("gamma_quantile: p must lie in (0, 1)");
    }
    if (gamma_p(shape, std::exp(kLogTiny)) >= p) {
        throw NumericError(
            "gamma_quantile: quantile underflows the positive double range");
    }
    double hi = std::max(2.0 * shape + 10.0, 30.0);
    while (gamma_p(shape, hi) <= p) {
        hi *= 2.0;
        if (hi > 1e300) {
            throw NumericError("gamma_quantile: failed to bracket quantile");
        }
    }
    double ylo = kLogTiny;
    double yhi = std::log(hi);
    // Fixed-count bisection in log space: deterministic and correct to the
    // last bit of the bracket midpoint.
    for (int it = 0; it < 110; ++it) {
        const double ymid = 0.5 * (ylo + yhi);
        if (gamma_p(shape, std::exp(ymid)) < p) {
            ylo = ymid;
        } else {
            yhi = ymid;
        }
    }
    return std::exp(0.5 * (ylo + yhi));
}

double beta_cdf(const double a, const double b, const double x) {
    if (!(a > 0.0 && b > 0.0)) {
        throw DomainError("beta_cdf: shapes must be positive");
    }
    if (std::isnan(x)) throw DomainError("beta_cdf: argument is NaN");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double ig_cdf(const IGParams& params, const double t) {
    if (!(params.delta > 0.0 && params.gamma_rate > 0.0)) {
        throw DomainError("ig_cdf: delta and gamma must be positive");
    }
    if (std::isnan(t)) throw DomainError("ig_cdf: argument is NaN");
    if (t <= 0.0) return 0.0;
    const double rt = std::sqrt(t);
    const double u = params.gamma_rate * rt - params.delta / rt;
    const double v = params.gamma_rate * rt + params.delta / rt;
    // Second term as exp(2 delta gamma + ln Phi(-v)); the exponents cancel to
    // order -u^2/2, so the sum never overflows even for huge delta gamma.
    const double log_term2 =
        2.0 * params.delta * params.gamma_rate + log_half_erfc(v * kInvSqrt2);
    double f = normal_cdf(u);
    if (log_term2 > kLogTiny) f += std::exp(log_term2);
    return f < 1.0 ? f : 1.0;
}

double ig_quantile(const IGParams& params, const double p) {
    if (!(params.delta > 0.0 && params.gamma_rate > 0.0)) {
        throw DomainError("ig_quantile: delta and gamma must be positive");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("ig_quantile: p must lie in (0, 1)");
    }
    double ylo = -708.0;
    if (ig_cdf(params, std::exp(ylo)) >= p) {
        throw NumericError(
            "ig_quantile: quantile underflows the positive double range");
    }
    double hi = std::max(4.0 * params.delta / params.gamma_rate, 1.0);
    while (ig_cdf(params, hi) <= p) {
        hi *= 2.0;
        if (hi > 1e300) {
            throw NumericError("ig_quantile: failed to bracket quantile");
        }
    }
    double yhi = std::log(hi);
    for (int it = 0; it < 110; ++it) {
        const double ymid = 0.5 * (ylo + yhi);
        if (ig_cdf(params, std::exp(ymid)) < p) {
            ylo = ymid;
        } else {
            yhi = ymid;
        }
    }
    return std::exp(0.5 * (ylo + yhi));
}

}  // namespace rpmsim
