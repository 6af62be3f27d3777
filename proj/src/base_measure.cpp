#include "rpmsim/base_measure.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "rpmsim/errors.hpp"
#include "rpmsim/format.hpp"
#include "rpmsim/sampling.hpp"
#include "rpmsim/special_functions.hpp"

namespace rpmsim {

namespace {

std::vector<double> parse_params(std::string_view text, std::string_view spec) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view piece =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - pos);
        const std::string token(piece);
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (token.empty() || end != token.c_str() + token.size() ||
            !std::isfinite(value)) {
            throw DomainError("base measure: bad numeric parameter in '" +
                              std::string(spec) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

BaseMeasure BaseMeasure::uniform(const double a, const double b) {
    if (!(b > a)) {
        throw DomainError("base measure uniform: needs lower < upper");
    }
    return BaseMeasure(Kind::uniform, a, b);
}

BaseMeasure BaseMeasure::normal(const double mu, const double sigma) {
    if (!(sigma > 0.0)) {
        throw DomainError("base measure normal: sigma must be positive");
    }
    return BaseMeasure(Kind::normal, mu, sigma);
}

BaseMeasure BaseMeasure::exponential(const double rate) {
    if (!(rate > 0.0)) {
        throw DomainError("base measure exponential: rate must be positive");
    }
    return BaseMeasure(Kind::exponential, rate, 0.0);
}

BaseMeasure BaseMeasure::parse(const std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (name == "uniform") {
        const auto p = parse_params(args, text);
        if (p.size() != 2) {
            throw DomainError("base measure uniform: expected 'uniform:a,b'");
        }
        return uniform(p[0], p[1]);
    }
    if (name == "normal") {
        const auto p = parse_params(args, text);
        if (p.size() != 2) {
            throw DomainError("base measure normal: expected 'normal:mu,sigma'");
        }
        return normal(p[0], p[1]);
    }
    if (name == "exponential") {
        const auto p = parse_params(args, text);
        if (p.size() != 1) {
            throw DomainError(
                "base measure exponential: expected 'exponential:rate'");
        }
        return exponential(p[0]);
    }
    throw DomainError("base measure: unknown form '" + std::string(text) +
                      "' (expected uniform:a,b | normal:mu,sigma | "
                      "exponential:rate)");
}

double BaseMeasure::cdf(const double x) const {
    switch (kind_) {
        case Kind::uniform: {
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        }
        case Kind::normal:
            return normal_cdf((x - p1_) / p2_);
        case Kind::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
    }
    throw DomainError("base measure: invalid kind");
}

double BaseMeasure::sample(RngStream& rng) const {
    switch (kind_) {
        case Kind::uniform:
            return p1_ + (p2_ - p1_) * rng.uniform01();
        case Kind::normal:
            return p1_ + p2_ * normal_sample(rng);
        case Kind::exponential:
            return exponential_sample(rng) / p1_;
    }
    throw DomainError("base measure: invalid kind");
}

std::string BaseMeasure::describe() const {
    switch (kind_) {
        case Kind::uniform:
            return "uniform:" + format_double(p1_) + "," + format_double(p2_);
        case Kind::normal:
            return "normal:" + format_double(p1_) + "," + format_double(p2_);
        case Kind::exponential:
            return "exponential:" + format_double(p1_);
    }
    throw DomainError("base measure: invalid kind");
}

}  // namespace rpmsim
