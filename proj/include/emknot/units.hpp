#pragma once

namespace emknot {

/// Physical constants in internal units. Defaults make c = mu0 = hbar = 1,
/// so the field-strength constant a = hbar*c*mu0 defaults to 1 as well.
/// eps0 is derived, never stored, so c^2 mu0 eps0 = 1 holds exactly.
struct Units {
    double c = 1.0;
    double mu0 = 1.0;
    double hbar = 1.0;

    double eps0() const { return 1.0 / (c * c * mu0); }
    double hcmu0() const { return hbar * c * mu0; }
};

}  // namespace emknot
