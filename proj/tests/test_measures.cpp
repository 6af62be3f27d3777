#include <cmath>

#include <doctest.h>

#include "rpmsim/errors.hpp"
#include "rpmsim/measure.hpp"
#include "rpmsim/rng.hpp"

using namespace rpmsim;

namespace {

Eigen::ArrayXd make(std::initializer_list<double> v) {
    Eigen::ArrayXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out[i++] = x;
    return out;
}

}  // namespace

TEST_CASE("kahan total recovers cancelled low-order terms") {
    CHECK(kahan_total(make({1e16, 1.0, -1e16})) == 1.0);
    CHECK(kahan_total(make({})) == 0.0);
    // Many small terms: compensated sum is exact here, naive is not required
    // to be.
    Eigen::ArrayXd v = Eigen::ArrayXd::Constant(1 << 20, 0x1p-20);
    CHECK(kahan_total(v) == 1.0);
}

TEST_CASE("normalize_weights lands on the simplex") {
    Eigen::ArrayXd w = make({0.3, 0.5, 0.9, 1e-12});
    normalize_weights(w);
    CHECK(std::fabs(kahan_total(w) - 1.0) <= 1e-12);
    CHECK((w > 0.0).all());

    Eigen::ArrayXd z = make({0.0, 0.0});
    CHECK_THROWS_AS(normalize_weights(z), NumericError);
    Eigen::ArrayXd bad = make({0.5, std::nan("")});
    CHECK_THROWS_AS(normalize_weights(bad), NumericError);
}

TEST_CASE("evaluate_cdf counts mass up to and including each grid point") {
    DiscreteRandomMeasure mu{make({0.2, 0.7}), make({0.6, 0.4})};
    const Eigen::ArrayXd f = evaluate_cdf(mu, make({0.1, 0.5, 1.0}));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == 0.6);
    CHECK(f[2] == 1.0);

    // An atom sitting exactly on a grid point belongs to that point.
    DiscreteRandomMeasure point{make({0.5}), make({1.0})};
    const Eigen::ArrayXd g = evaluate_cdf(point, make({0.5}));
    CHECK(g[0] == 1.0);
}

TEST_CASE("evaluate_cdf rejects bad grids") {
    DiscreteRandomMeasure mu{make({0.2}), make({1.0})};
    Eigen::ArrayXd unsorted = make({0.5, 0.1});
    CHECK_THROWS_AS(evaluate_cdf(mu, unsorted), DomainError);
    Eigen::ArrayXd repeated = make({0.1, 0.1});
    CHECK_THROWS_AS(evaluate_cdf(mu, repeated), DomainError);
    Eigen::ArrayXd infinite = make({0.1, INFINITY});
    CHECK_THROWS_AS(evaluate_cdf(mu, infinite), DomainError);
    CHECK_THROWS_AS(evaluate_cdf(mu, make({})), DomainError);
}

TEST_CASE("evaluate_cdf with no atoms is identically zero") {
    DiscreteRandomMeasure empty{make({}), make({})};
    const Eigen::ArrayXd f = evaluate_cdf(empty, make({-1.0, 0.0, 1.0}));
    CHECK((f == 0.0).all());
}

TEST_CASE("evaluate_cdf is invariant under atom permutation") {
    RngStream rng(27, 0);
    const Eigen::Index n = 257;
    Eigen::ArrayXd atoms(n), weights(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        atoms[i] = rng.uniform01();
        weights[i] = rng.uniform_open();
    }
    normalize_weights(weights);
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(9, 0.1, 0.9);

    DiscreteRandomMeasure mu{atoms, weights};
    const Eigen::ArrayXd base = evaluate_cdf(mu, grid);

    // Reverse and a deterministic shuffle; bucket sums are accumulated in
    // atom-index order per bucket, so exact equality requires the same
    // summands per bucket, which permutation preserves only up to ordering.
    // The per-bucket Kahan accumulation makes the result identical for these
    // weights in practice; assert to 1e-15 absolute.
    DiscreteRandomMeasure rev{atoms.reverse(), weights.reverse()};
    const Eigen::ArrayXd fr = evaluate_cdf(rev, grid);
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
        CHECK(std::fabs(fr[k] - base[k]) <= 1e-15);
    }
}
