#pragma once

#include <utility>

#include "emknot/grid.hpp"
#include "emknot/knotfields.hpp"
#include "emknot/units.hpp"

namespace emknot {

/// Discrete approximation of the symmetric-convention analysis transform
/// F(k) = (2 pi)^{-3/2} Integral d^3r f(r) e^{+i k.r}.
SpectralField dft_forward(const RealVectorFieldGrid& f);

/// Synthesis f(r) = (2 pi)^{-3/2} Integral d^3k F(k) e^{-i k.r}; the
/// imaginary residue (relative L2) of the output is written to *imag_residue
/// when given, and the real part is returned.
RealVectorFieldGrid dft_inverse(const SpectralField& F, double* imag_residue = nullptr);

/// Per-mode transverse projection F - e_k (e_k . F); zeroes the k = 0 mode.
/// Idempotent.
SpectralField transverse_project(SpectralField F);

/// Zero the k = 0 mode and all Nyquist planes (their e_k direction is not
/// Hermitian-pairable), then project. Used when building Cauchy states.
SpectralField sanitize_modes(SpectralField F);

/// Relative L2 longitudinal content |k_hat . F| / |F| (0 for empty field).
double transversality_residual(const SpectralField& F);

/// Largest relative Hermitian-symmetry violation |F(-k) - conj F(k)| / max|F|.
double hermitian_residual(const SpectralField& F);

/// Mode-wise spectral curl (-i k x F) and divergence (-i k . F).
SpectralField spectral_curl(const SpectralField& F);
std::vector<std::complex<double>> spectral_divergence(const SpectralField& F);

/// Continuum transform of the knot-family initial fields at one wavevector;
/// returns (B0k, E0k). Exact closed form, zero at k = 0.
std::pair<CVec3, CVec3> analytic_spectrum(const Vec3& k, const KnotParams& p,
                                          const Units& u = {});

/// Sampled initial fields of the knot family; returns (E0, B0).
std::pair<RealVectorFieldGrid, RealVectorFieldGrid> sample_initial_fields(
    const GridSpec& g, const KnotParams& p, const Units& u = {});

/// Cauchy state from sampled initial data: forward transform, Nyquist/DC
/// cleanup and transverse projection of the discretization residue.
CauchyState make_cauchy_state(const GridSpec& g, const KnotParams& p, const Units& u = {});

/// Cauchy state with modes sampled from the continuum closed-form spectra.
CauchyState make_cauchy_state_analytic(const GridSpec& g, const KnotParams& p,
                                       const Units& u = {});

struct PropagateOptions {
    double transversality_tol = 1e-8;  // relative L2, NotTransversal beyond
    double reality_tol = 1e-10;        // relative L2, RealityViolated beyond
};

/// Exact spectral time evolution; returns (E, B) grids at time t.
std::pair<RealVectorFieldGrid, RealVectorFieldGrid> propagate(
    const CauchyState& state, double t, const Units& u = {},
    const PropagateOptions& opt = {});

struct ResidualNorms {
    double l2 = 0.0;   // absolute L2 norm of the residual grid
    double max = 0.0;  // max-norm
    double rel = 0.0;  // l2 divided by the reference field scale
};

/// Norms of the four vacuum-equation residuals of the propagated state at
/// time t: divergence of E and B (spectral, relative to gradient content)
/// and the two curl equations with centered time differences at t +- dt.
struct MaxwellResidualReport {
    ResidualNorms div_e, div_b, faraday, ampere;
};

MaxwellResidualReport maxwell_residual(const CauchyState& state, double t, double dt,
                                       const Units& u = {});

/// Grid energy 1/2 Integral (eps0 |E|^2 + |B|^2/mu0) d^3r with the grid
/// measure; deterministic summation order.
double field_energy(const RealVectorFieldGrid& E, const RealVectorFieldGrid& B,
                    const Units& u = {});

/// Same energy evaluated from spectral modes (Parseval route).
double spectral_energy(const CauchyState& state, const Units& u = {});

}  // namespace emknot
