#pragma once

#include <string>
#include <string_view>

#include "rpmsim/rng.hpp"

namespace rpmsim {

// The centering distribution H: a named real distribution supplying a sampler
// and a CDF for path evaluation.
class BaseMeasure {
public:
    enum class Kind { uniform, normal, exponential };

    static BaseMeasure uniform(double a, double b);
    static BaseMeasure normal(double mu, double sigma);
    static BaseMeasure exponential(double rate);

    // Parses "uniform:0,1", "normal:0,1", "exponential:1".
    static BaseMeasure parse(std::string_view text);

    Kind kind() const { return kind_; }
    double cdf(double x) const;
    double sample(RngStream& rng) const;
    std::string describe() const;

private:
    BaseMeasure(Kind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}
    Kind kind_;
    double p1_, p2_;
};

}  // namespace rpmsim
