#include "rpmsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rpmsim/errors.hpp"

namespace rpmsim {

double kahan_total(const Eigen::ArrayXd& v) {
    // Kahan-Babuska form: also survives terms larger than the running sum.
    double sum = 0.0, comp = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double x = v[i];
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

void normalize_weights(Eigen::ArrayXd& weights) {
    const double total = kahan_total(weights);
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw NumericError("normalize_weights: total is not a positive finite number");
    }
    weights /= total;
}

Eigen::ArrayXd evaluate_cdf(const DiscreteRandomMeasure& measure,
                            const Eigen::ArrayXd& grid) {
    if (measure.atoms.size() != measure.weights.size()) {
        throw DomainError("evaluate_cdf: atoms and weights differ in length");
    }
    const Eigen::Index g = grid.size();
    if (g < 1) throw DomainError("evaluate_cdf: grid must not be empty");
    for (Eigen::Index j = 0; j < g; ++j) {
        if (!std::isfinite(grid[j])) {
            throw DomainError("evaluate_cdf: grid points must be finite");
        }
        if (j > 0 && !(grid[j] > grid[j - 1])) {
            throw DomainError("evaluate_cdf: grid must be strictly increasing");
        }
    }
    // Bucket each atom at the first grid point covering it, then prefix-sum:
    // O(n log g) instead of n x g comparisons.
    std::vector<double> bucket(static_cast<std::size_t>(g) + 1, 0.0);
    const double* lo = grid.data();
    const double* hi = grid.data() + g;
    for (Eigen::Index i = 0; i < measure.atoms.size(); ++i) {
        const Eigen::Index k = std::lower_bound(lo, hi, measure.atoms[i]) - lo;
        bucket[static_cast<std::size_t>(k)] += measure.weights[i];
    }
    Eigen::ArrayXd out(g);
    double sum = 0.0, comp = 0.0;
    for (Eigen::Index j = 0; j < g; ++j) {
        const double y = bucket[static_cast<std::size_t>(j)] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        out[j] = sum;
    }
    return out;
}

}  // namespace rpmsim
