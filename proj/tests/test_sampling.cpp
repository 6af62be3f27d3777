#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "rpmsim/sampling.hpp"

using namespace rpmsim;

namespace {

// One-sample Kolmogorov-Smirnov statistic against a supplied CDF.
template <class Cdf>
double ks_stat(std::vector<double> xs, Cdf cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return d;
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

}  // namespace

TEST_CASE("streams are deterministic and separated") {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    bool same = true, diff_stream = false, diff_seed = false;
    for (int k = 0; k < 16; ++k) {
        const std::uint64_t xa = a.next_u64();
        same = same && (xa == b.next_u64());
        diff_stream = diff_stream || (xa != c.next_u64());
        diff_seed = diff_seed || (xa != d.next_u64());
    }
    CHECK(same);
    CHECK(diff_stream);
    CHECK(diff_seed);
}

TEST_CASE("uniform variants stay inside their intervals") {
    RngStream rng(5, 0);
    for (int k = 0; k < 20000; ++k) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform_open();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("normal sample moments") {
    RngStream rng(11, 0);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = normal_sample(rng);
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.012);
    CHECK(var > 0.97);
    CHECK(var < 1.03);
}

TEST_CASE("exponential sample moments") {
    RngStream rng(12, 0);
    const int n = 100000;
    double sum = 0.0;
    int tail = 0;
    for (int k = 0; k < n; ++k) {
        const double x = exponential_sample(rng);
        CHECK(x > 0.0);
        sum += x;
        if (x > 1.0) ++tail;
    }
    CHECK(std::fabs(sum / n - 1.0) < 0.012);
    CHECK(std::fabs(static_cast<double>(tail) / n - std::exp(-1.0)) < 0.006);
}

TEST_CASE("gamma sample moments across the shape boundary") {
    struct Case {
        double shape;
        int n;
        double mean_tol, var_lo, var_hi;
    };
    const Case cases[] = {
        {0.5, 200000, 0.006, 0.48, 0.52},
        {3.7, 100000, 0.022, 3.55, 3.85},
    };
    std::uint64_t stream = 0;
    for (const Case& c : cases) {
        RngStream rng(13, stream++);
        double sum = 0.0, sumsq = 0.0;
        for (int k = 0; k < c.n; ++k) {
            const double x = gamma_sample(c.shape, rng);
            CHECK(x > 0.0);
            sum += x;
            sumsq += x * x;
        }
        const double mean = sum / c.n;
        const double var = sumsq / c.n - mean * mean;
        CHECK(std::fabs(mean - c.shape) < c.mean_tol);
        CHECK(var > c.var_lo);
        CHECK(var < c.var_hi);
    }
}

TEST_CASE("beta sample moments") {
    RngStream rng(14, 0);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = beta_sample(2.0, 5.0, rng);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::fabs(mean - 2.0 / 7.0) < 0.006);
    CHECK(std::fabs(var - 10.0 / (49.0 * 8.0)) < 0.0012);
}

TEST_CASE("half-stable tail and median") {
    RngStream rng(15, 0);
    const int n = 200000;
    std::vector<double> xs(n);
    int tail = 0;
    for (int k = 0; k < n; ++k) {
        xs[k] = half_stable_sample(rng);
        CHECK(xs[k] > 0.0);
        if (xs[k] > 1.0) ++tail;
    }
    // P(X > 1) = P(W^2 < 1) = 2 Phi(1) - 1.
    CHECK(std::fabs(static_cast<double>(tail) / n - 0.682689492137) < 0.005);
    std::nth_element(xs.begin(), xs.begin() + n / 2, xs.end());
    CHECK(std::fabs(xs[n / 2] - 2.19810933832) < 0.05);
}

TEST_CASE("inverse-Gaussian sampler agrees with its cdf") {
    const double crit = 1.628 / std::sqrt(20000.0);  // alpha = 0.01
    std::uint64_t stream = 0;
    for (const IGParams par : {IGParams{1.0, 1.0}, IGParams{0.02, 1.0}}) {
        RngStream rng(16, stream++);
        std::vector<double> xs(20000);
        for (double& x : xs) {
            x = ig_sample(par, rng);
            CHECK(x > 0.0);
        }
        CHECK(ks_stat(std::move(xs), [&](double t) { return ig_cdf(par, t); }) <
              crit);
    }
}

TEST_CASE("inverse-Gaussian convolution closure") {
    // IG(d1, g) + IG(d2, g) has the IG(d1 + d2, g) law.
    RngStream rng(17, 0);
    const std::size_t n = 20000;
    std::vector<double> sums(n), direct(n);
    for (std::size_t k = 0; k < n; ++k) {
        sums[k] =
            ig_sample({0.7, 1.0}, rng) + ig_sample({0.5, 1.0}, rng);
        direct[k] = ig_sample({1.2, 1.0}, rng);
    }
    const double crit = 1.628 * std::sqrt(2.0 / static_cast<double>(n));
    CHECK(two_sample_ks(std::move(sums), std::move(direct)) < crit);
}

TEST_CASE("gamma arrivals are ordered partial sums") {
    RngStream rng(18, 0);
    const Eigen::Index n = 1000;
    const Eigen::ArrayXd g = gamma_arrivals(n, rng);
    REQUIRE(g.size() == n);
    CHECK(g[0] > 0.0);
    for (Eigen::Index i = 1; i < n; ++i) CHECK(g[i] > g[i - 1]);
    CHECK(std::fabs(g[n - 1] - 1000.0) < 120.0);
}
