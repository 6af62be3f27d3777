#include <cmath>

#include <doctest.h>

#include "rpmsim/diagnostics.hpp"
#include "rpmsim/errors.hpp"
#include "rpmsim/special_functions.hpp"

using namespace rpmsim;

namespace {

const BaseMeasure kUnit = BaseMeasure::uniform(0.0, 1.0);

Eigen::ArrayXd decade_grid() { return Eigen::ArrayXd::LinSpaced(9, 0.1, 0.9); }

}  // namespace

TEST_CASE("closed-form moments") {
    const MomentPair p = pdp_moments({0.1, 1.0}, 0.5);
    CHECK(p.mean == 0.5);
    CHECK(p.variance == doctest::Approx(0.1125).epsilon(1e-14));

    const MomentPair g = nigp_moments(1.0, 0.5);
    CHECK(g.mean == 0.5);
    CHECK(g.variance ==
          doctest::Approx(0.25 / 3.3537500563574017).epsilon(1e-12));

    CHECK_THROWS_AS(pdp_moments({0.1, 1.0}, -0.5), DomainError);
    CHECK_THROWS_AS(pdp_moments({0.1, 1.0}, 1.5), DomainError);
    CHECK_THROWS_AS(nigp_moments(0.0, 0.5), DomainError);
}

TEST_CASE("chebyshev bounds clamp at one") {
    CHECK(chebyshev_bound_pdp({0.9, 10.0}, 0.5, 0.1) ==
          doctest::Approx(5.0 / 22.0).epsilon(1e-14));
    CHECK(chebyshev_bound_nigp(1.0, 0.5, 0.2) == 1.0);
    CHECK(chebyshev_bound_nigp(1.0, 0.5, 0.5) ==
          doctest::Approx(1.0 / 3.3537500563574017).epsilon(1e-12));
    CHECK_THROWS_AS(chebyshev_bound_pdp({0.9, 10.0}, 0.5, 0.0), DomainError);
}

TEST_CASE("descending-order probability quadrature") {
    // Independent oracle values for all (i, alpha, theta) triples used in the
    // ordering study, high-precision reference integration.
    struct Row {
        int i;
        double alpha, theta, want;
    };
    const Row rows[] = {
        {1, 0.1, 1.0, 0.672439996605},   {10, 0.1, 1.0, 0.607397908755},
        {100, 0.1, 1.0, 0.521214567028}, {1, 0.5, 1.0, 0.597674286031},
        {10, 0.5, 1.0, 0.526347540213},  {100, 0.5, 1.0, 0.503120385352},
        {1, 0.9, 1.0, 0.522958819195},   {10, 0.9, 1.0, 0.504413563123},
        {100, 0.9, 1.0, 0.500485245087}, {1, 0.1, 10.0, 0.523089428669},
        {10, 0.1, 10.0, 0.521214567028}, {100, 0.1, 10.0, 0.511697805410},
        {1, 0.5, 10.0, 0.515123622049},  {10, 0.5, 10.0, 0.510598604914},
        {100, 0.5, 10.0, 0.502652398242},{1, 0.9, 10.0, 0.504049457440},
        {10, 0.9, 10.0, 0.502323761286}, {100, 0.9, 10.0, 0.500441573487},
    };
    for (const Row& r : rows) {
        CAPTURE(r.i);
        CAPTURE(r.alpha);
        CAPTURE(r.theta);
        CHECK(std::fabs(lemma1_prob(r.i, r.alpha, r.theta) - r.want) < 5e-7);
    }
    // alpha = 0, theta = 1: both fractions are uniform and
    // P(b'(1 - b) < b) = Integral_0^1/2 u/(1-u) du + 1/2 = log 2 exactly.
    CHECK(lemma1_prob(1, 0.0, 1.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK_THROWS_AS(lemma1_prob(0, 0.1, 1.0), DomainError);
    CHECK_THROWS_AS(lemma1_prob(1, 1.2, 1.0), DomainError);
}

TEST_CASE("quadrature tolerance tightening is stable") {
    for (const auto& [i, alpha, theta] :
         {std::tuple{1, 0.9, 1.0}, std::tuple{100, 0.1, 10.0}}) {
        const double coarse = lemma1_prob(i, alpha, theta, 1e-6);
        const double fine = lemma1_prob(i, alpha, theta, 1e-9);
        CHECK(std::fabs(coarse - fine) < 1e-6);
    }
}

TEST_CASE("Monte Carlo agrees with quadrature") {
    RngStream rng(96, 0);
    const std::size_t reps = 200000;
    const double mc = lemma1_prob_mc(1, 0.1, 1.0, reps, rng);
    const double quad = lemma1_prob(1, 0.1, 1.0);
    const double se = std::sqrt(quad * (1.0 - quad) / static_cast<double>(reps));
    CHECK(std::fabs(mc - quad) < 4.0 * se);
}

TEST_CASE("empirical order probability") {
    ProcessConfig dp;
    dp.kind = ProcessKind::dp_new;
    dp.theta = 10.0;
    dp.n = 20;
    CHECK(empirical_order_prob(dp, kUnit, 1, 200, 11) == 1.0);
    CHECK(empirical_order_prob(dp, kUnit, 19, 200, 11) == 1.0);
    CHECK_THROWS_AS(empirical_order_prob(dp, kUnit, 20, 200, 11), DomainError);

    ProcessConfig nigp;
    nigp.kind = ProcessKind::nigp_new;
    nigp.theta = 1.0;
    nigp.n = 20;
    CHECK(empirical_order_prob(nigp, kUnit, 5, 200, 11) == 1.0);

    // Stick-breaking is not monotone: for alpha = 0.1, theta = 1 the first
    // two weights swap order on roughly a third of draws.
    ProcessConfig stick;
    stick.kind = ProcessKind::pdp_stick;
    stick.alpha = 0.1;
    stick.theta = 1.0;
    stick.n = 10;
    const double p = empirical_order_prob(stick, kUnit, 1, 2000, 95);
    CHECK(p > 0.62);
    CHECK(p < 0.73);

    ProcessConfig eps = stick;
    eps.epsilon = 0.01;
    CHECK_THROWS_AS(empirical_order_prob(eps, kUnit, 1, 100, 11), DomainError);
}

TEST_CASE("error report is invariant in the worker count") {
    ProcessConfig dp;
    dp.kind = ProcessKind::dp_new;
    dp.theta = 10.0;
    dp.n = 50;
    const Eigen::ArrayXd grid = decade_grid();
    const ErrorReport serial = error_report(dp, 64, grid, kUnit, 91, 1);
    const ErrorReport threaded = error_report(dp, 64, grid, kUnit, 91, 4);
    CHECK((serial.empirical_mean == threaded.empirical_mean).all());
    CHECK((serial.empirical_sd == threaded.empirical_sd).all());
    CHECK(serial.max_mean_error == threaded.max_mean_error);
    CHECK(serial.max_sd_error == threaded.max_sd_error);

    // Stream offsets shift to fresh randomness.
    const ErrorReport shifted = error_report(dp, 64, grid, kUnit, 91, 1, 64);
    CHECK(shifted.empirical_mean[0] != serial.empirical_mean[0]);
}

TEST_CASE("error report mean band and exact-moment columns") {
    ProcessConfig dp;
    dp.kind = ProcessKind::dp_new;
    dp.theta = 10.0;
    dp.n = 100;
    const Eigen::ArrayXd grid = decade_grid();
    const ErrorReport rep = error_report(dp, 200, grid, kUnit, 92, 1);
    CHECK(rep.aggregated_paths == 200);
    CHECK(rep.failed_paths == 0);
    const double root = std::sqrt(static_cast<double>(rep.aggregated_paths));
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
        CHECK(rep.true_mean[k] == doctest::Approx(grid[k]).epsilon(1e-14));
        const double want_sd =
            std::sqrt(grid[k] * (1.0 - grid[k]) / (1.0 + dp.theta));
        CHECK(rep.true_sd[k] == doctest::Approx(want_sd).epsilon(1e-12));
        CHECK(std::fabs(rep.empirical_mean[k] - rep.true_mean[k]) <=
              4.0 * rep.true_sd[k] / root);
    }
    CHECK(rep.max_mean_error ==
          (rep.empirical_mean - rep.true_mean).abs().maxCoeff());
}

TEST_CASE("error report counts degenerate sticks without dropping them") {
    ProcessConfig stick;
    stick.kind = ProcessKind::nigp_stick;
    stick.theta = 50.0;
    stick.n = 50;
    const ErrorReport rep = error_report(stick, 100, decade_grid(), kUnit, 97, 1);
    CHECK(rep.degenerate_paths > 50);
    CHECK(rep.aggregated_paths == 100);
    CHECK(rep.failed_paths == 0);
}

TEST_CASE("error report excludes quantile-underflow paths") {
    ProcessConfig dp;
    dp.kind = ProcessKind::dp_new;
    dp.theta = 1.0;
    dp.n = 100;
    const ErrorReport rep = error_report(dp, 200, decade_grid(), kUnit, 2024, 1);
    CHECK(rep.failed_paths >= 1);
    CHECK(rep.aggregated_paths == 200 - rep.failed_paths);
    CHECK(rep.degenerate_paths == 0);
}

TEST_CASE("truncated-process variance matches the exact law") {
    // nigp-new at n = 500: empirical SD of F(0.5) within 10% relative.
    ProcessConfig nigp;
    nigp.kind = ProcessKind::nigp_new;
    nigp.theta = 1.0;
    nigp.n = 500;
    const ErrorReport a = error_report(nigp, 200, decade_grid(), kUnit, 93, 1);
    const double ra = a.empirical_sd[4] / a.true_sd[4];
    CHECK(ra > 0.9);
    CHECK(ra < 1.1);

    ProcessConfig pdp;
    pdp.kind = ProcessKind::pdp_new;
    pdp.alpha = 0.5;
    pdp.theta = 1.0;
    pdp.n = 100;
    pdp.m = 500;
    const ErrorReport b = error_report(pdp, 200, decade_grid(), kUnit, 94, 1);
    const double rb = b.empirical_sd[4] / b.true_sd[4];
    CHECK(rb > 0.9);
    CHECK(rb < 1.1);
}

TEST_CASE("error report argument validation") {
    ProcessConfig dp;
    dp.kind = ProcessKind::dp_new;
    dp.theta = 10.0;
    dp.n = 10;
    Eigen::ArrayXd grid = decade_grid();
    CHECK_THROWS_AS(error_report(dp, 1, grid, kUnit, 1, 1), DomainError);
    Eigen::ArrayXd empty;
    CHECK_THROWS_AS(error_report(dp, 10, empty, kUnit, 1, 1), DomainError);
}
