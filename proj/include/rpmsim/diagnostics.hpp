#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

#include "rpmsim/base_measure.hpp"
#include "rpmsim/constructors.hpp"

namespace rpmsim {

struct MomentPair {
    double mean = 0.0;
    double variance = 0.0;
};

// Mean and variance of P((-inf, x]) when H((-inf, x]) = h_a.
// PDP: mean h_a, variance h_a (1 - h_a) (1 - alpha) / (1 + theta).
// N-IGP: mean h_a, variance h_a (1 - h_a) / xi(theta).
MomentPair pdp_moments(const PdpParams& params, double h_a);
MomentPair nigp_moments(double theta, double h_a);

// Chebyshev tail bound P(|P(A) - h_a| >= eps) <= min(1, var / eps^2).
double chebyshev_bound_pdp(const PdpParams& params, double h_a, double eps);
double chebyshev_bound_nigp(double theta, double h_a, double eps);

// P{ b_{i+1} (1 - b_i) < b_i } with b_i ~ Beta(1 - alpha, theta + i alpha)
// and b_{i+1} ~ Beta(1 - alpha, theta + (i+1) alpha) independent.  Quadrature
// version evaluates the one-dimensional integral to abs_tol; the Monte Carlo
// version draws the two fractions reps times.
double lemma1_prob(int i, double alpha, double theta, double abs_tol = 1e-9);
double lemma1_prob_mc(int i, double alpha, double theta, std::size_t reps,
                      RngStream& rng);

// Fraction of reps in which weight i+1 < weight i (1-based i) under the given
// construction.  Every rep counts toward the denominator; ties count as false.
double empirical_order_prob(const ProcessConfig& config, const BaseMeasure& H,
                            Eigen::Index i, std::size_t reps,
                            std::uint64_t seed);

// Pathwise CDF error study on a grid.  Paths are simulated independently on
// streams seed/(stream_offset + j); flagged-but-closed draws still aggregate
// (they are valid probability measures) and are tallied as degenerate_paths,
// while draws that throw a numeric error are excluded and tallied as
// failed_paths.  max_*_error compare against the closed-form moments of the
// untruncated process.
struct ErrorReport {
    ProcessConfig config;
    std::uint64_t seed = 0;
    Eigen::ArrayXd grid;
    Eigen::ArrayXd empirical_mean;
    Eigen::ArrayXd empirical_sd;
    Eigen::ArrayXd true_mean;
    Eigen::ArrayXd true_sd;
    double max_mean_error = 0.0;
    double max_sd_error = 0.0;
    std::size_t paths = 0;             // requested
    std::size_t aggregated_paths = 0;  // included in the moment estimates
    std::size_t degenerate_paths = 0;
    std::size_t failed_paths = 0;
};

ErrorReport error_report(const ProcessConfig& config, std::size_t paths,
                         const Eigen::ArrayXd& grid, const BaseMeasure& H,
                         std::uint64_t seed, unsigned workers = 1,
                         std::uint64_t stream_offset = 0);

}  // namespace rpmsim
