#include "rpmsim/sampling.hpp"

#include <cmath>
#include <limits>

#include "rpmsim/errors.hpp"

namespace rpmsim {

double normal_sample(RngStream& rng) {
    const double u1 = rng.uniform_open();
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double exponential_sample(RngStream& rng) { return -std::log(rng.uniform_open()); }

double gamma_sample(const double shape, RngStream& rng) {
    if (!(shape > 0.0)) throw DomainError("gamma_sample: shape must be positive");
    if (shape < 1.0) {
        // Marsaglia-Tsang boost: Gamma(shape) = Gamma(shape + 1) * U^(1/shape).
        const double u = rng.uniform_open();
        return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        double x, v;
        do {
            x = normal_sample(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double beta_sample(const double a, const double b, RngStream& rng) {
    if (!(a > 0.0 && b > 0.0)) {
        throw DomainError("beta_sample: shapes must be positive");
    }
    const double g1 = gamma_sample(a, rng);
    const double g2 = gamma_sample(b, rng);
    double r = g1 / (g1 + g2);
    // Keep the result inside the open interval: downstream code takes
    // log(1 - r) and divides by r.
    if (!(r > 0.0)) {
        r = std::numeric_limits<double>::denorm_min();
    } else if (r >= 1.0) {
        r = std::nextafter(1.0, 0.0);
    }
    return r;
}

double ig_sample(const IGParams& params, RngStream& rng) {
    if (!(params.delta > 0.0 && params.gamma_rate > 0.0)) {
        throw DomainError("ig_sample: delta and gamma must be positive");
    }
    // Michael-Schucany-Haas, reduced to the root ratio frac = x1 / mu which
    // stays in (0, 1] even when 4 delta gamma / W^2 overflows.
    const double mu = params.delta / params.gamma_rate;
    const double w = normal_sample(rng);
    double v = w * w;
    if (v < 1e-300) v = 1e-300;
    const double r = 4.0 * params.delta * params.gamma_rate / v;
    double frac;
    if (r > 1e30) {
        frac = 1.0 - 2.0 / std::sqrt(r);
    } else {
        const double s = std::sqrt(1.0 + r);
        frac = r / ((1.0 + s) * (1.0 + s));
    }
    const double u = rng.uniform01();
    return u * (1.0 + frac) < 1.0 ? mu * frac : mu / frac;
}

double half_stable_sample(RngStream& rng) {
    const double w = normal_sample(rng);
    double v = w * w;
    if (v < 1e-300) v = 1e-300;
    return 1.0 / v;
}

Eigen::ArrayXd gamma_arrivals(const Eigen::Index count, RngStream& rng) {
    if (count < 1) {
        throw DomainError("gamma_arrivals: count must be at least one");
    }
    Eigen::ArrayXd out(count);
    double t = 0.0;
    for (Eigen::Index i = 0; i < count; ++i) {
        t += exponential_sample(rng);
        // Strict increase even when an exponential rounds to nothing against
        // the running sum.
        if (i > 0 && t <= out[i - 1]) {
            t = std::nextafter(out[i - 1],
                               std::numeric_limits<double>::infinity());
        }
        out[i] = t;
    }
    return out;
}

}  // namespace rpmsim
