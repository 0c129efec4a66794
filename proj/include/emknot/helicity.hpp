#pragma once

#include <complex>
#include <utility>

#include "emknot/grid.hpp"
#include "emknot/knotfields.hpp"
#include "emknot/quadrature.hpp"
#include "emknot/spectral.hpp"
#include "emknot/units.hpp"

namespace emknot {

/// Per-k circular-polarization frame. e1 and e2 are real vectors of squared
/// norm 1/2 with e1 x e2 = e_k / 2; the complex combinations e_R = e1 + i e2
/// and e_L = e1 - i e2 satisfy e_R . e_L = 1, e_k x e_R = -i e_R and the
/// parity relations e1(-k) = -e1(k), e2(-k) = e2(k).
struct HelicityFrame {
    Vec3 e_k, e1, e2;

    CVec3 e_R() const { return CVec3(e1) + std::complex<double>(0, 1) * CVec3(e2); }
    CVec3 e_L() const { return CVec3(e1) - std::complex<double>(0, 1) * CVec3(e2); }
};

/// Deterministic frame from the spherical tangent directions of k, with the
/// k_x meridian limit on the z-axis and signs fixed by the parity relations.
HelicityFrame helicity_frame(const Vec3& k);

/// Frame rotated by angle psi about e_k; same algebra, different gauge.
/// Used to verify frame independence of reported quantities.
HelicityFrame helicity_frame_rotated(const Vec3& k, double psi);

/// Circular-polarization amplitudes at one wavevector.
struct AmplitudePair {
    std::complex<double> a_R, a_L;
};

/// Extract a_R, a_L from initial-data spectra at k. The inputs must be
/// transversal (relative tolerance transversality_tol).
AmplitudePair amplitudes_from_spectra(const CVec3& E0k, const CVec3& B0k, const Vec3& k,
                                      const HelicityFrame& frame, const Units& u = {},
                                      double transversality_tol = 1e-8);

/// Frame-free closed-form amplitude vectors (a_R e_R, a_L e_L) of the knot
/// family at k.
std::pair<CVec3, CVec3> analytic_amplitudes(const KnotParams& p, const Vec3& k,
                                            const Units& u = {});

/// Closed-form photon-number densities (|a_R|^2, |a_L|^2) of the knot family.
std::pair<double, double> spectral_density(const KnotParams& p, const Vec3& k,
                                           const Units& u = {});

/// Photon numbers: adaptive radial x product angular quadrature of the
/// densities obtained through the amplitude-extraction path, plus the
/// closed forms (a/hbar c mu0) ((n+-m)^2 + (l+-s)^2)/8.
struct PhotonNumbers {
    double quad_R = 0.0, quad_L = 0.0;
    double closed_R = 0.0, closed_L = 0.0;
};

PhotonNumbers photon_numbers(const KnotParams& p, const QuadratureConfig& cfg = {},
                             const Units& u = {});

/// Electromagnetic helicity h = hbar (N_R - N_L).
double em_helicity(double N_R, double N_L, const Units& u = {});

/// Coulomb-gauge potentials (A, C) of the propagated state at time t;
/// spectrally divergence-free, with B = curl A and E = curl C.
std::pair<RealVectorFieldGrid, RealVectorFieldGrid> coulomb_potentials(
    const CauchyState& state, double t, const Units& u = {},
    const PropagateOptions& opt = {});

/// Magnetic and electric helicity integrals over the grid:
/// h_m = 1/(2 c mu0) Integral A.B, h_e = eps0/(2c) Integral C.E.
std::pair<double, double> helicity_integrals(const RealVectorFieldGrid& A,
                                             const RealVectorFieldGrid& B,
                                             const RealVectorFieldGrid& C,
                                             const RealVectorFieldGrid& E,
                                             const Units& u = {});

/// Summary of a helicity analysis run (serialized to JSON by the CLI).
struct HelicityReport {
    double h_m = 0.0, h_e = 0.0, h = 0.0;
    double N_R = 0.0, N_L = 0.0;
};

}  // namespace emknot
