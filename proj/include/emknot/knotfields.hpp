#pragma once

#include "emknot/quadrature.hpp"
#include "emknot/units.hpp"
#include "emknot/vec3.hpp"

namespace emknot {

/// Parameters of the torus-knot electromagnetic family: four positive
/// integers selecting the member, a field-strength constant a and a length
/// scale L0 (both 1 in internal units).
struct KnotParams {
    int n = 1, m = 1, l = 1, s = 1;
    double a = 1.0;
    double L0 = 1.0;

    void validate() const;  // throws ConfigError on violation
    bool is_null_family() const { return n == m && l == s; }
};

/// Dimensionless event coordinates: X = x/L0 (etc.), T = c t / L0.
struct SpacetimePoint {
    double X = 0.0, Y = 0.0, Z = 0.0, T = 0.0;

    double r2() const { return X * X + Y * Y + Z * Z; }
};

/// Electric and magnetic field vectors at one point (internal units).
struct EMField {
    Vec3 E, B;
};

/// The scalars A, P, Q driving the closed-form time dependence:
/// A = (R^2 - T^2 + 1)/2, P = T(T^2 - 3A^2), Q = A(A^2 - 3T^2).
struct ScalarTriple {
    double A = 0.0, P = 0.0, Q = 0.0;
};

/// The four polynomial vectors of the closed-form solution.
/// B is proportional to Q*bq + P*bp and E to Q*eq - P*ep.
struct KnotVectors {
    Vec3 bq, bp, ep, eq;
};

ScalarTriple scalar_apq(const SpacetimePoint& p);
KnotVectors eval_h_vectors(const SpacetimePoint& p, const KnotParams& k);

/// Closed-form fields at any event. Throws SingularPoint if (A^2+T^2)^3
/// underflows (never reached for real inputs; defensive epsilon 1e-300).
EMField eval_eb(const SpacetimePoint& p, const KnotParams& k, const Units& u = {});

/// Initial (T = 0) fields; identical to eval_eb at T = 0 by construction.
EMField eval_initial(const Vec3& pos, const KnotParams& k, const Units& u = {});

/// The four base Fourier integrals in closed form, including the common
/// prefactor sqrt(a)/(2 pi L0^2). i1c/i1s carry the 1/K weight in the
/// integrand, i2c/i2s do not; all four carry the e^{-K} damping.
struct BaseIntegrals {
    double i1c = 0.0, i2c = 0.0, i1s = 0.0, i2s = 0.0;
};

BaseIntegrals base_integrals(double A, double T, double a = 1.0, double L0 = 1.0);

/// Same four integrals evaluated by 1D radial quadrature after the angular
/// reduction; independent cross-check of the closed forms.
BaseIntegrals base_integrals_oracle(double R, double T, double a = 1.0, double L0 = 1.0,
                                    const QuadratureConfig& cfg = {});
BaseIntegrals base_integrals_oracle(const Vec3& point, double T, double a = 1.0,
                                    double L0 = 1.0, const QuadratureConfig& cfg = {});

}  // namespace emknot
