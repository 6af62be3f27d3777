#include "rpmsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rpmsim/errors.hpp"
#include "rpmsim/format.hpp"
#include "rpmsim/measure.hpp"
#include "rpmsim/parallel.hpp"
#include "rpmsim/quadrature.hpp"
#include "rpmsim/sampling.hpp"
#include "rpmsim/special_functions.hpp"

namespace rpmsim {

namespace {

void require_probability(const double h_a, const char* who) {
    if (!(h_a >= 0.0 && h_a <= 1.0)) {
        throw DomainError(std::string(who) + ": hA must lie in [0, 1]");
    }
}

double kahan_mean_over(const std::vector<double>& flat,
                       const std::vector<unsigned char>& status,
                       const std::size_t g, const std::size_t k,
                       const std::size_t count) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < status.size(); ++j) {
        if (status[j] > 1) continue;
        const double y = flat[j * g + k] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(count);
}

double kahan_sse_over(const std::vector<double>& flat,
                      const std::vector<unsigned char>& status,
                      const std::size_t g, const std::size_t k,
                      const double mean) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < status.size(); ++j) {
        if (status[j] > 1) continue;
        const double d = flat[j * g + k] - mean;
        const double y = d * d - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

MomentPair exact_moments(const ProcessConfig& config, const double h_a) {
    switch (config.kind) {
        case ProcessKind::dp_new:
            return pdp_moments({0.0, config.theta}, h_a);
        case ProcessKind::stable_new:
            return pdp_moments({config.alpha, 0.0}, h_a);
        case ProcessKind::pdp_new:
        case ProcessKind::pdp_stick:
            return pdp_moments({config.alpha, config.theta}, h_a);
        case ProcessKind::nigp_new:
        case ProcessKind::nigp_stick:
            return nigp_moments(config.theta, h_a);
    }
    throw DomainError("exact_moments: invalid kind");
}

}  // namespace

MomentPair pdp_moments(const PdpParams& params, const double h_a) {
    validate_pdp_params(params);
    require_probability(h_a, "pdp_moments");
    return {h_a, h_a * (1.0 - h_a) * (1.0 - params.alpha) / (1.0 + params.theta)};
}

MomentPair nigp_moments(const double theta, const double h_a) {
    if (!(theta > 0.0)) throw DomainError("nigp_moments: theta must be positive");
    require_probability(h_a, "nigp_moments");
    return {h_a, h_a * (1.0 - h_a) / xi(theta)};
}

double chebyshev_bound_pdp(const PdpParams& params, const double h_a,
                           const double eps) {
    if (!(eps > 0.0)) {
        throw DomainError("chebyshev_bound_pdp: eps must be positive");
    }
    const MomentPair mp = pdp_moments(params, h_a);
    return std::min(1.0, mp.variance / (eps * eps));
}

double chebyshev_bound_nigp(const double theta, const double h_a,
                            const double eps) {
    if (!(eps > 0.0)) {
        throw DomainError("chebyshev_bound_nigp: eps must be positive");
    }
    const MomentPair mp = nigp_moments(theta, h_a);
    return std::min(1.0, mp.variance / (eps * eps));
}

double lemma1_prob(const int i, const double alpha, const double theta,
                   const double abs_tol) {
    if (i < 1) throw DomainError("lemma1_prob: index must be at least 1");
    validate_pdp_params({alpha, theta});
    if (!(abs_tol > 0.0)) {
        throw DomainError("lemma1_prob: abs_tol must be positive");
    }
    const double a = 1.0 - alpha;
    const double b = theta + static_cast<double>(i) * alpha;
    const double b_next = b + alpha;
    const double ln_beta_ab = ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);

    // P{b_{i+1}(1 - b_i) < b_i}
    //   = E[ I_{min(b_i/(1-b_i), 1)}(a, b_next) ]
    //   = Integral_0^1/2 f_{a,b}(v) I_{v/(1-v)}(a, b_next) dv  +  P{b_i >= 1/2}.
    // Substituting u = v^a removes the v^(a-1) endpoint singularity exactly:
    // v = u^s with s = 1/a, and f(v) dv = s (1-v)^(b-1) / B(a,b) du.
    const double s = 1.0 / a;
    const double upper = std::pow(0.5, a);
    auto integrand = [&](const double u) {
        if (u <= 0.0) return 0.0;
        const double v = std::pow(u, s);
        const double inner = beta_cdf(a, b_next, v / (1.0 - v));
        return s * std::exp((b - 1.0) * std::log1p(-v) - ln_beta_ab) * inner;
    };
    const QuadratureResult q =
        adaptive_gauss_legendre(integrand, 0.0, upper, abs_tol);
    if (!q.converged) {
        throw NumericError("lemma1_prob: quadrature stalled at error estimate " +
                           format_double(q.error_estimate));
    }
    return q.value + (1.0 - beta_cdf(a, b, 0.5));
}

double lemma1_prob_mc(const int i, const double alpha, const double theta,
                      const std::size_t reps, RngStream& rng) {
    if (i < 1) throw DomainError("lemma1_prob_mc: index must be at least 1");
    validate_pdp_params({alpha, theta});
    if (reps < 1) throw DomainError("lemma1_prob_mc: reps must be positive");
    const double a = 1.0 - alpha;
    const double b = theta + static_cast<double>(i) * alpha;
    std::size_t hits = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        const double b_i = beta_sample(a, b, rng);
        const double b_next = beta_sample(a, b + alpha, rng);
        if (b_next * (1.0 - b_i) < b_i) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(reps);
}

double empirical_order_prob(const ProcessConfig& config, const BaseMeasure& H,
                            const Eigen::Index i, const std::size_t reps,
                            const std::uint64_t seed) {
    validate_process_config(config);
    if (i < 1) {
        throw DomainError("empirical_order_prob: index must be at least 1");
    }
    if (reps < 1) {
        throw DomainError("empirical_order_prob: reps must be positive");
    }
    if (config.kind == ProcessKind::pdp_stick && config.epsilon) {
        throw DomainError(
            "empirical_order_prob: needs a fixed truncation length, not the "
            "epsilon rule");
    }
    const Eigen::Index length =
        config.kind == ProcessKind::pdp_new ? config.n * config.m : config.n;
    if (i + 1 > length) {
        throw DomainError("empirical_order_prob: index " + std::to_string(i + 1) +
                          " exceeds the truncation length " +
                          std::to_string(length));
    }
    std::size_t hits = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        RngStream rng(seed, r);
        const MeasureDraw draw = draw_measure(config, H, rng);
        // Ties (including the all-zero tail of a degenerate stick) count as
        // not descending; every rep counts toward the denominator.
        if (draw.measure.weights[i] < draw.measure.weights[i - 1]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(reps);
}

ErrorReport error_report(const ProcessConfig& config, const std::size_t paths,
                         const Eigen::ArrayXd& grid, const BaseMeasure& H,
                         const std::uint64_t seed, const unsigned workers,
                         const std::uint64_t stream_offset) {
    validate_process_config(config);
    if (paths < 2) throw DomainError("error_report: need at least two paths");
    const Eigen::Index g = grid.size();
    if (g < 1) throw DomainError("error_report: grid must be nonempty");
    for (Eigen::Index k = 0; k < g; ++k) {
        if (!std::isfinite(grid[k])) {
            throw DomainError("error_report: grid points must be finite");
        }
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            throw DomainError("error_report: grid must be strictly increasing");
        }
    }

    const std::size_t gs = static_cast<std::size_t>(g);
    std::vector<double> flat(paths * gs, 0.0);
    // 0 = clean, 1 = degenerate but closed (still a valid measure), 2 = failed
    std::vector<unsigned char> status(paths, 0);
    parallel_for(paths, workers, [&](const std::size_t j) {
        RngStream rng(seed, stream_offset + j);
        try {
            const MeasureDraw draw = draw_measure(config, H, rng);
            const Eigen::ArrayXd f = evaluate_cdf(draw.measure, grid);
            std::copy(f.data(), f.data() + g, flat.begin() + j * gs);
            status[j] = draw.flag.degenerate ? 1 : 0;
        } catch (const NumericError&) {
            status[j] = 2;
        } catch (const TruncationOverflow&) {
            status[j] = 2;
        }
    });

    ErrorReport report;
    report.config = config;
    report.seed = seed;
    report.grid = grid;
    report.paths = paths;
    for (const unsigned char st : status) {
        if (st == 1) ++report.degenerate_paths;
        if (st == 2) ++report.failed_paths;
    }
    report.aggregated_paths = paths - report.failed_paths;
    if (report.aggregated_paths < 2) {
        throw NumericError("error_report: fewer than two usable paths");
    }

    report.empirical_mean.resize(g);
    report.empirical_sd.resize(g);
    report.true_mean.resize(g);
    report.true_sd.resize(g);
    report.max_mean_error = 0.0;
    report.max_sd_error = 0.0;
    for (Eigen::Index k = 0; k < g; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        const double mean =
            kahan_mean_over(flat, status, gs, ks, report.aggregated_paths);
        const double sse = kahan_sse_over(flat, status, gs, ks, mean);
        const double sd = std::sqrt(
            sse / static_cast<double>(report.aggregated_paths - 1));
        const MomentPair mp = exact_moments(config, H.cdf(grid[k]));
        report.empirical_mean[k] = mean;
        report.empirical_sd[k] = sd;
        report.true_mean[k] = mp.mean;
        report.true_sd[k] = std::sqrt(mp.variance);
        report.max_mean_error =
            std::max(report.max_mean_error, std::fabs(mean - mp.mean));
        report.max_sd_error = std::max(report.max_sd_error,
                                       std::fabs(sd - report.true_sd[k]));
    }
    return report;
}

}  // namespace rpmsim
