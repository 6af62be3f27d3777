#include "rpmsim/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rpmsim/errors.hpp"
#include "rpmsim/sampling.hpp"
#include "rpmsim/special_functions.hpp"

namespace rpmsim {

namespace {

Eigen::ArrayXd draw_atoms(const Eigen::Index n, const BaseMeasure& H,
                          RngStream& rng) {
    Eigen::ArrayXd atoms(n);
    for (Eigen::Index i = 0; i < n; ++i) atoms[i] = H.sample(rng);
    return atoms;
}

void require_count(const Eigen::Index n, const char* who) {
    if (n < 1) {
        throw DomainError(std::string(who) + ": need at least one atom");
    }
}

void require_arrivals(const Eigen::ArrayXd& arrivals, const char* who) {
    if (!(arrivals[0] > 0.0)) {
        throw DomainError(std::string(who) + ": arrival times must be positive");
    }
    for (Eigen::Index i = 1; i < arrivals.size(); ++i) {
        if (!(arrivals[i] > arrivals[i - 1])) {
            throw DomainError(std::string(who) +
                              ": arrival times must be strictly increasing");
        }
    }
}

// 1 - Gamma_i / Gamma_{n+1}, guarded against a ratio that rounds to one.
double tail_fraction(const double arrival, const double last, const char* who) {
    const double p = 1.0 - arrival / last;
    if (!(p > 0.0)) {
        throw NumericError(std::string(who) +
                           ": arrival ratio rounded to one, quantile argument "
                           "collapsed to zero");
    }
    return p;
}

}  // namespace

void validate_pdp_params(const PdpParams& params) {
    if (!(params.alpha >= 0.0 && params.alpha < 1.0)) {
        throw DomainError("pdp params: alpha must lie in [0, 1)");
    }
    if (!(params.theta > -params.alpha)) {
        throw DomainError("pdp params: theta must exceed -alpha");
    }
}

void validate_pdp_product_params(const PdpParams& params) {
    if (params.alpha == 0.0) {
        throw DomainError(
            "pdp_new: alpha = 0 is the Dirichlet boundary; use dp_new");
    }
    if (params.theta == 0.0) {
        throw DomainError(
            "pdp_new: theta = 0 is the stable boundary; use stable_new");
    }
    if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
        throw DomainError("pdp_new: alpha must lie in (0, 1)");
    }
    if (!(params.theta > 0.0)) {
        throw DomainError("pdp_new: theta must be positive");
    }
}

TruncationRule TruncationRule::fixed(const Eigen::Index n) {
    TruncationRule rule;
    rule.kind = Kind::fixed_n;
    rule.n = n;
    return rule;
}

TruncationRule TruncationRule::epsilon_rule(const double eps,
                                            const std::size_t cap) {
    TruncationRule rule;
    rule.kind = Kind::epsilon;
    rule.eps = eps;
    rule.cap = cap;
    return rule;
}

Eigen::ArrayXd dp_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                        const double theta) {
    const Eigen::Index n = arrivals.size() - 1;
    if (n < 1) {
        throw DomainError(
            "dp_weights_from_arrivals: need n + 1 >= 2 arrival times");
    }
    if (!(theta > 0.0)) {
        throw DomainError("dp_weights_from_arrivals: theta must be positive");
    }
    require_arrivals(arrivals, "dp_weights_from_arrivals");
    const double shape = theta / static_cast<double>(n);
    const double last = arrivals[n];
    Eigen::ArrayXd weights(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double p = tail_fraction(arrivals[i], last, "dp weights");
        weights[i] = gamma_quantile(shape, p);
    }
    normalize_weights(weights);
    return weights;
}

Eigen::ArrayXd stable_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                            const double alpha) {
    if (arrivals.size() < 1) {
        throw DomainError(
            "stable_weights_from_arrivals: need at least one arrival time");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError(
            "stable_weights_from_arrivals: alpha must lie in (0, 1)");
    }
    require_arrivals(arrivals, "stable_weights_from_arrivals");
    // Gamma_i^(-1/alpha) spans hundreds of orders of magnitude at small alpha;
    // shift in log space before exponentiating.
    Eigen::ArrayXd logw = (-1.0 / alpha) * arrivals.log();
    logw -= logw[0];
    Eigen::ArrayXd weights = logw.exp();
    normalize_weights(weights);
    return weights;
}

Eigen::ArrayXd nigp_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                          const double theta) {
    const Eigen::Index n = arrivals.size() - 1;
    if (n < 1) {
        throw DomainError(
            "nigp_weights_from_arrivals: need n + 1 >= 2 arrival times");
    }
    if (!(theta > 0.0)) {
        throw DomainError("nigp_weights_from_arrivals: theta must be positive");
    }
    require_arrivals(arrivals, "nigp_weights_from_arrivals");
    const IGParams params{theta / static_cast<double>(n), 1.0};
    const double last = arrivals[n];
    Eigen::ArrayXd weights(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double p = tail_fraction(arrivals[i], last, "nigp weights");
        weights[i] = ig_quantile(params, p);
    }
    normalize_weights(weights);
    return weights;
}

Eigen::ArrayXd stick_weights_from_fractions(const Eigen::ArrayXd& fractions) {
    if (fractions.size() < 1) {
        throw DomainError(
            "stick_weights_from_fractions: need at least one fraction");
    }
    Eigen::ArrayXd weights(fractions.size());
    double residual = 1.0;
    for (Eigen::Index i = 0; i < fractions.size(); ++i) {
        const double f = fractions[i];
        if (!(f >= 0.0 && f <= 1.0)) {
            throw DomainError(
                "stick_weights_from_fractions: fractions must lie in [0, 1]");
        }
        weights[i] = f * residual;
        residual *= 1.0 - f;
    }
    return weights;
}

DiscreteRandomMeasure dp_new(const Eigen::Index n, const double theta,
                             const BaseMeasure& H, RngStream& rng) {
    require_count(n, "dp_new");
    if (!(theta > 0.0)) throw DomainError("dp_new: theta must be positive");
    const Eigen::ArrayXd arrivals = gamma_arrivals(n + 1, rng);
    Eigen::ArrayXd weights = dp_weights_from_arrivals(arrivals, theta);
    return {draw_atoms(n, H, rng), std::move(weights)};
}

DiscreteRandomMeasure stable_new(const Eigen::Index n, const double alpha,
                                 const BaseMeasure& H, RngStream& rng) {
    require_count(n, "stable_new");
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("stable_new: alpha must lie in (0, 1)");
    }
    const Eigen::ArrayXd arrivals = gamma_arrivals(n, rng);
    Eigen::ArrayXd weights = stable_weights_from_arrivals(arrivals, alpha);
    return {draw_atoms(n, H, rng), std::move(weights)};
}

DiscreteRandomMeasure pdp_new(const Eigen::Index n, const Eigen::Index m,
                              const PdpParams& params, const BaseMeasure& H,
                              RngStream& rng) {
    require_count(n, "pdp_new");
    require_count(m, "pdp_new");
    validate_pdp_product_params(params);
    const Eigen::ArrayXd q =
        dp_weights_from_arrivals(gamma_arrivals(n + 1, rng), params.theta);
    Eigen::ArrayXd weights(n * m);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::ArrayXd s =
            stable_weights_from_arrivals(gamma_arrivals(m, rng), params.alpha);
        weights.segment(i * m, m) = q[i] * s;
    }
    std::sort(weights.data(), weights.data() + weights.size(),
              std::greater<double>());
    normalize_weights(weights);
    return {draw_atoms(n * m, H, rng), std::move(weights)};
}

DiscreteRandomMeasure pdp_stick(const TruncationRule& rule,
                                const PdpParams& params, const BaseMeasure& H,
                                RngStream& rng) {
    validate_pdp_params(params);
    const double a = 1.0 - params.alpha;
    auto fraction_at = [&](const Eigen::Index i) {
        // beta_i ~ Beta(1 - alpha, theta + i alpha), i counted from 1
        return beta_sample(a, params.theta + static_cast<double>(i) * params.alpha,
                           rng);
    };
    Eigen::ArrayXd weights;
    if (rule.kind == TruncationRule::Kind::fixed_n) {
        require_count(rule.n, "pdp_stick");
        Eigen::ArrayXd fractions(rule.n);
        for (Eigen::Index i = 0; i + 1 < rule.n; ++i) {
            fractions[i] = fraction_at(i + 1);
        }
        fractions[rule.n - 1] = 1.0;
        weights = stick_weights_from_fractions(fractions);
    } else {
        if (!(rule.eps > 0.0 && rule.eps < 1.0)) {
            throw DomainError("pdp_stick: epsilon must lie in (0, 1)");
        }
        if (rule.cap < 1) throw DomainError("pdp_stick: cap must be positive");
        std::vector<double> kept;
        double residual = 1.0;
        bool closed = false;
        for (std::size_t i = 1; i <= rule.cap; ++i) {
            const double f = fraction_at(static_cast<Eigen::Index>(i));
            const double candidate = f * residual;
            if (candidate < rule.eps) {
                // First sub-threshold term: close the stick by assigning the
                // whole residual mass here.
                kept.push_back(residual);
                closed = true;
                break;
            }
            kept.push_back(candidate);
            residual *= 1.0 - f;
        }
        if (!closed) {
            throw TruncationOverflow(
                "pdp_stick: epsilon rule did not stop within the term cap",
                rule.cap);
        }
        weights = Eigen::Map<const Eigen::ArrayXd>(
            kept.data(), static_cast<Eigen::Index>(kept.size()));
    }
    normalize_weights(weights);
    return {draw_atoms(weights.size(), H, rng), std::move(weights)};
}

NigpStickDraw nigp_stick(const Eigen::Index n, const double theta,
                         const BaseMeasure& H, RngStream& rng) {
    require_count(n, "nigp_stick");
    if (!(theta > 0.0)) throw DomainError("nigp_stick: theta must be positive");
    Eigen::ArrayXd fractions = Eigen::ArrayXd::Zero(n);
    DegeneracyFlag flag;
    Eigen::Index close_at = n - 1;
    double residual = 1.0;  // prod of (1 - V_j) over completed steps
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double delta = theta / std::sqrt(residual);
        bool collapsed = false;
        double v = 0.0;
        if (!(delta <= 1e300)) {
            collapsed = true;
        } else {
            const double x = ig_sample(IGParams{delta, 1.0}, rng);
            const double z = half_stable_sample(rng);
            v = x / (x + z);
            // Stored-value test: the fraction itself, not its ingredients,
            // decides degeneracy.
            collapsed = !std::isfinite(v) || 1.0 - v < 0x1p-52;
        }
        if (collapsed) {
            flag.degenerate = true;
            flag.first_index = i + 1;
            close_at = i;
            break;
        }
        fractions[i] = v;
        residual *= 1.0 - v;
    }
    fractions[close_at] = 1.0;
    Eigen::ArrayXd weights = stick_weights_from_fractions(fractions);
    normalize_weights(weights);
    return {{draw_atoms(n, H, rng), std::move(weights)}, flag};
}

DiscreteRandomMeasure nigp_new(const Eigen::Index n, const double theta,
                               const BaseMeasure& H, RngStream& rng) {
    require_count(n, "nigp_new");
    if (!(theta > 0.0)) throw DomainError("nigp_new: theta must be positive");
    const Eigen::ArrayXd arrivals = gamma_arrivals(n + 1, rng);
    Eigen::ArrayXd weights = nigp_weights_from_arrivals(arrivals, theta);
    return {draw_atoms(n, H, rng), std::move(weights)};
}

const char* process_name(const ProcessKind kind) {
    switch (kind) {
        case ProcessKind::dp_new:
            return "dp-new";
        case ProcessKind::stable_new:
            return "stable-new";
        case ProcessKind::pdp_new:
            return "pdp-new";
        case ProcessKind::pdp_stick:
            return "pdp-stick";
        case ProcessKind::nigp_new:
            return "nigp-new";
        case ProcessKind::nigp_stick:
            return "nigp-stick";
    }
    throw DomainError("process_name: invalid kind");
}

ProcessKind process_from_name(const std::string_view name) {
    if (name == "dp-new") return ProcessKind::dp_new;
    if (name == "stable-new") return ProcessKind::stable_new;
    if (name == "pdp-new") return ProcessKind::pdp_new;
    if (name == "pdp-stick") return ProcessKind::pdp_stick;
    if (name == "nigp-new") return ProcessKind::nigp_new;
    if (name == "nigp-stick") return ProcessKind::nigp_stick;
    throw DomainError("unknown process '" + std::string(name) +
                      "' (expected dp-new | stable-new | pdp-new | pdp-stick | "
                      "nigp-new | nigp-stick)");
}

void validate_process_config(const ProcessConfig& config) {
    switch (config.kind) {
        case ProcessKind::dp_new:
            require_count(config.n, "dp-new");
            if (!(config.theta > 0.0)) {
                throw DomainError("dp-new: theta must be positive");
            }
            return;
        case ProcessKind::stable_new:
            require_count(config.n, "stable-new");
            if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
                throw DomainError("stable-new: alpha must lie in (0, 1)");
            }
            return;
        case ProcessKind::pdp_new:
            require_count(config.n, "pdp-new");
            require_count(config.m, "pdp-new");
            validate_pdp_product_params({config.alpha, config.theta});
            return;
        case ProcessKind::pdp_stick:
            validate_pdp_params({config.alpha, config.theta});
            if (config.epsilon) {
                if (!(*config.epsilon > 0.0 && *config.epsilon < 1.0)) {
                    throw DomainError("pdp-stick: epsilon must lie in (0, 1)");
                }
                if (config.cap < 1) {
                    throw DomainError("pdp-stick: cap must be positive");
                }
            } else {
                require_count(config.n, "pdp-stick");
            }
            return;
        case ProcessKind::nigp_new:
            require_count(config.n, "nigp-new");
            if (!(config.theta > 0.0)) {
                throw DomainError("nigp-new: theta must be positive");
            }
            return;
        case ProcessKind::nigp_stick:
            require_count(config.n, "nigp-stick");
            if (!(config.theta > 0.0)) {
                throw DomainError("nigp-stick: theta must be positive");
            }
            return;
    }
    throw DomainError("process config: invalid kind");
}

MeasureDraw draw_measure(const ProcessConfig& config, const BaseMeasure& H,
                         RngStream& rng) {
    switch (config.kind) {
        case ProcessKind::dp_new:
            return {dp_new(config.n, config.theta, H, rng), {}};
        case ProcessKind::stable_new:
            return {stable_new(config.n, config.alpha, H, rng), {}};
        case ProcessKind::pdp_new:
            return {pdp_new(config.n, config.m, {config.alpha, config.theta}, H,
                            rng),
                    {}};
        case ProcessKind::pdp_stick: {
            const TruncationRule rule =
                config.epsilon
                    ? TruncationRule::epsilon_rule(*config.epsilon, config.cap)
                    : TruncationRule::fixed(config.n);
            return {pdp_stick(rule, {config.alpha, config.theta}, H, rng), {}};
        }
        case ProcessKind::nigp_new:
            return {nigp_new(config.n, config.theta, H, rng), {}};
        case ProcessKind::nigp_stick: {
            NigpStickDraw draw = nigp_stick(config.n, config.theta, H, rng);
            return {std::move(draw.measure), draw.flag};
        }
    }
    throw DomainError("draw_measure: invalid kind");
}

}  // namespace rpmsim
