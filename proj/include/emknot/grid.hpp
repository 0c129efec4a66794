#pragma once

#include <cstdint>
#include <vector>

#include "emknot/errors.hpp"
#include "emknot/vec3.hpp"

namespace emknot {

/// Cubic sampling grid covering [-extent, extent)^3 with n samples per axis
/// (n even, >= 8). Dual-grid wavenumbers are the standard DFT frequencies
/// scaled by dk = pi/extent.
struct GridSpec {
    int n = 64;
    double extent = 8.0;

    void validate() const;
    double spacing() const { return 2.0 * extent / n; }
    double dk() const;
    std::int64_t count() const { return std::int64_t(n) * n * n; }

    std::int64_t index(int ix, int iy, int iz) const {
        return (std::int64_t(ix) * n + iy) * n + iz;
    }
    Vec3 point(int ix, int iy, int iz) const {
        const double h = spacing();
        return {-extent + h * ix, -extent + h * iy, -extent + h * iz};
    }
    /// Signed integer DFT frequency of axis index i.
    int freq(int i) const { return i < n / 2 ? i : i - n; }
    Vec3 wavevector(int ix, int iy, int iz) const {
        const double d = dk();
        return {d * freq(ix), d * freq(iy), d * freq(iz)};
    }

    bool operator==(const GridSpec& o) const { return n == o.n && extent == o.extent; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (a != b) throw GridMismatch(std::string("grid mismatch in ") + what);
}

/// Real vector field sampled on a GridSpec, index order (ix, iy, iz) with
/// iz fastest.
struct RealVectorFieldGrid {
    GridSpec grid;
    std::vector<Vec3> samples;

    RealVectorFieldGrid() = default;
    explicit RealVectorFieldGrid(const GridSpec& g) : grid(g), samples(g.count()) {}

    Vec3& at(int ix, int iy, int iz) { return samples[grid.index(ix, iy, iz)]; }
    const Vec3& at(int ix, int iy, int iz) const { return samples[grid.index(ix, iy, iz)]; }
};

/// Complex vector field over the dual grid, same index layout. Memory is
/// laid out as interleaved (x, y, z) complex components per mode.
struct SpectralField {
    GridSpec grid;
    std::vector<CVec3> modes;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid(g), modes(g.count()) {}

    CVec3& at(int ix, int iy, int iz) { return modes[grid.index(ix, iy, iz)]; }
    const CVec3& at(int ix, int iy, int iz) const { return modes[grid.index(ix, iy, iz)]; }
};

/// Initial-data spectra of the vacuum Cauchy problem; both fields are kept
/// transversal and Hermitian-symmetric.
struct CauchyState {
    SpectralField E0k, B0k;

    const GridSpec& grid() const { return E0k.grid; }
};

}  // namespace emknot
