#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "rpmsim/base_measure.hpp"
#include "rpmsim/measure.hpp"
#include "rpmsim/rng.hpp"

namespace rpmsim {

// Two-parameter process parameters: discount alpha in [0,1), concentration
// theta > -alpha. The product construction additionally needs alpha > 0 and
// theta > 0.
struct PdpParams {
    double alpha = 0.0;
    double theta = 1.0;
};

void validate_pdp_params(const PdpParams& params);
void validate_pdp_product_params(const PdpParams& params);

// Stopping rule for stick-breaking: keep exactly n atoms, or stop at the first
// weight below eps (the cap bounds runaway loops).
struct TruncationRule {
    enum class Kind { fixed_n, epsilon };
    Kind kind = Kind::fixed_n;
    Eigen::Index n = 1;
    double eps = 0.0;
    std::size_t cap = 1000000;

    static TruncationRule fixed(Eigen::Index n);
    static TruncationRule epsilon_rule(double eps, std::size_t cap = 1000000);
};

// Numerical collapse marker for the inverse-Gaussian stick: set when some V_i
// rounds to 1 (1 - V_i < 2^-52), an IG delta parameter exceeds 1e300, or an
// intermediate goes non-finite. first_index is the 1-based index of the
// degenerate fraction.
struct DegeneracyFlag {
    bool degenerate = false;
    Eigen::Index first_index = 0;
};

struct NigpStickDraw {
    DiscreteRandomMeasure measure;
    DegeneracyFlag flag;
};

// Weight cores, exposed as the deterministic testing seam: they map an
// injected arrival / fraction sequence to the normalized weight vector.
//
// arrivals carries Gamma_1..Gamma_{n+1} (the trailing entry normalizes);
// for the stable weights only Gamma_1..Gamma_n enter.
Eigen::ArrayXd dp_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                        double theta);
Eigen::ArrayXd stable_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                            double alpha);
Eigen::ArrayXd nigp_weights_from_arrivals(const Eigen::ArrayXd& arrivals,
                                          double theta);
// p_i = f_i * prod_{j<i}(1 - f_j); the caller is responsible for closing the
// stick (final fraction 1) when normalization is required.
Eigen::ArrayXd stick_weights_from_fractions(const Eigen::ArrayXd& fractions);

// Process constructors. Atoms are i.i.d. from H; weights follow the named
// construction. The *_new constructors produce strictly decreasing weights.
DiscreteRandomMeasure dp_new(Eigen::Index n, double theta, const BaseMeasure& H,
                             RngStream& rng);
DiscreteRandomMeasure stable_new(Eigen::Index n, double alpha,
                                 const BaseMeasure& H, RngStream& rng);
DiscreteRandomMeasure pdp_new(Eigen::Index n, Eigen::Index m,
                              const PdpParams& params, const BaseMeasure& H,
                              RngStream& rng);
DiscreteRandomMeasure pdp_stick(const TruncationRule& rule,
                                const PdpParams& params, const BaseMeasure& H,
                                RngStream& rng);
NigpStickDraw nigp_stick(Eigen::Index n, double theta, const BaseMeasure& H,
                         RngStream& rng);
DiscreteRandomMeasure nigp_new(Eigen::Index n, double theta,
                               const BaseMeasure& H, RngStream& rng);

// Uniform handle over the six constructors for the diagnostics and CLI layers.
enum class ProcessKind {
    dp_new,
    stable_new,
    pdp_new,
    pdp_stick,
    nigp_new,
    nigp_stick,
};

const char* process_name(ProcessKind kind);
ProcessKind process_from_name(std::string_view name);

struct ProcessConfig {
    ProcessKind kind = ProcessKind::dp_new;
    double alpha = 0.5;
    double theta = 1.0;
    Eigen::Index n = 100;
    Eigen::Index m = 500;
    std::optional<double> epsilon;  // pdp_stick: use the epsilon rule
    std::size_t cap = 1000000;
};

void validate_process_config(const ProcessConfig& config);

struct MeasureDraw {
    DiscreteRandomMeasure measure;
    DegeneracyFlag flag;
};

MeasureDraw draw_measure(const ProcessConfig& config, const BaseMeasure& H,
                         RngStream& rng);

}  // namespace rpmsim
