#pragma once

#include <Eigen/Core>

namespace rpmsim {

// A discrete random probability measure: atoms Y_i with simplex weights p_i.
struct DiscreteRandomMeasure {
    Eigen::ArrayXd atoms;
    Eigen::ArrayXd weights;
};

// Compensated (Kahan-Babuska) sum.
double kahan_total(const Eigen::ArrayXd& v);

// Divides by the compensated total so that |sum - 1| <= 1e-12.
void normalize_weights(Eigen::ArrayXd& weights);

// F(x) = sum of weights of atoms <= x for each grid point (grid must be
// strictly increasing; throws DomainError otherwise).
Eigen::ArrayXd evaluate_cdf(const DiscreteRandomMeasure& measure,
                            const Eigen::ArrayXd& grid);

}  // namespace rpmsim
