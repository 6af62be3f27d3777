#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace rpmsim {

namespace detail {

// Classical Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr double kGL7X[7] = {
    -9.49107912342758375e-01, -7.41531185599394460e-01,
    -4.05845151377397184e-01, 0.0,
    4.05845151377397184e-01,  7.41531185599394460e-01,
    9.49107912342758375e-01};
inline constexpr double kGL7W[7] = {
    1.29484966168869925e-01, 2.79705391489276589e-01,
    3.81830050505118757e-01, 4.17959183673469126e-01,
    3.81830050505118757e-01, 2.79705391489276589e-01,
    1.29484966168869925e-01};
inline constexpr double kGL15X[15] = {
    -9.87992518020485377e-01, -9.37273392400705951e-01,
    -8.48206583410427206e-01, -7.24417731360170070e-01,
    -5.70972172608538830e-01, -3.94151347077563385e-01,
    -2.01194093997434542e-01, 0.0,
    2.01194093997434542e-01,  3.94151347077563385e-01,
    5.70972172608538830e-01,  7.24417731360170070e-01,
    8.48206583410427206e-01,  9.37273392400705951e-01,
    9.87992518020485377e-01};
inline constexpr double kGL15W[15] = {
    3.07532419961181538e-02, 7.03660474881071529e-02,
    1.07159220467171759e-01, 1.39570677926154324e-01,
    1.66269205816994114e-01, 1.86161000015562239e-01,
    1.98431485327111634e-01, 2.02578241925561370e-01,
    1.98431485327111634e-01, 1.86161000015562239e-01,
    1.66269205816994114e-01, 1.39570677926154324e-01,
    1.07159220467171759e-01, 7.03660474881071529e-02,
    3.07532419961181538e-02};

}  // namespace detail

struct QuadratureResult {
    double value;
    double error_estimate;  // sum of accepted per-panel |G15 - G7| differences
    bool converged;
};

// Adaptive quadrature with nested 7/15-point Gauss-Legendre panels. A panel is
// accepted when |G15 - G7| is within its share of abs_tol (proportional to
// panel length) or the subdivision depth limit is reached; the achieved error
// estimate is reported either way.
template <class F>
QuadratureResult adaptive_gauss_legendre(F&& f, double lo, double hi,
                                         double abs_tol, int max_depth = 48) {
    struct Panel {
        double lo, hi;
        int depth;
    };
    const double total_len = hi - lo;
    std::vector<Panel> stack{{lo, hi, 0}};
    double sum = 0.0, err = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double h = 0.5 * (p.hi - p.lo);
        const double mid = 0.5 * (p.hi + p.lo);
        double g7 = 0.0, g15 = 0.0;
        for (int i = 0; i < 7; ++i)
            g7 += detail::kGL7W[i] * f(mid + h * detail::kGL7X[i]);
        for (int i = 0; i < 15; ++i)
            g15 += detail::kGL15W[i] * f(mid + h * detail::kGL15X[i]);
        g7 *= h;
        g15 *= h;
        const double diff = std::abs(g15 - g7);
        const double budget = abs_tol * (p.hi - p.lo) / total_len;
        if (diff <= budget || p.depth >= max_depth) {
            sum += g15;
            err += diff;
            if (diff > budget) converged = false;
        } else {
            stack.push_back({p.lo, mid, p.depth + 1});
            stack.push_back({mid, p.hi, p.depth + 1});
        }
    }
    return {sum, err, converged};
}

}  // namespace rpmsim
