#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace emknot {

/// Budget and tolerances for the adaptive radial/1D quadratures and the
/// product angular rule used for k-space integrals.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_depth = 40;      // adaptive bisection depth limit
    double k_max = 40.0;     // radial truncation in dimensionless K
    int n_phi = 8;           // azimuthal nodes (uniform)
    int n_mu = 4;            // polar nodes (Gauss-Legendre in cos(theta))
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence (no tabulated constants).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Adaptive integral of f over [lo, hi] with an embedded GL7/GL15 error
/// estimate and interval bisection. Throws QuadratureNotConverged if the
/// depth budget is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, double abs_tol, int max_depth);

inline double integrate_adaptive(const std::function<double(double)>& f, double lo,
                                 double hi, const QuadratureConfig& cfg) {
    return integrate_adaptive(f, lo, hi, cfg.rel_tol, cfg.abs_tol, cfg.max_depth);
}

/// Nodes (unit directions) and weights of the product rule on the unit
/// sphere; weights sum to 4*pi. Exact for low-degree spherical polynomials.
struct SphereRule {
    std::vector<std::array<double, 3>> directions;
    std::vector<double> weights;
};
SphereRule sphere_rule(int n_phi, int n_mu);

}  // namespace emknot
