#pragma once

#include <cmath>
#include <complex>

namespace emknot {

/// Real 3-vector, value type used for positions, wavevectors and fields.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Complex 3-vector (Fourier modes, circular-polarization vectors).
struct CVec3 {
    std::complex<double> x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};

    CVec3() = default;
    CVec3(std::complex<double> px, std::complex<double> py, std::complex<double> pz)
        : x(px), y(py), z(pz) {}
    explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    CVec3& operator-=(const CVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    CVec3& operator*=(std::complex<double> s) { x *= s; y *= s; z *= s; return *this; }

    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }
};

inline CVec3 operator+(CVec3 a, const CVec3& b) { return a += b; }
inline CVec3 operator-(CVec3 a, const CVec3& b) { return a -= b; }
inline CVec3 operator*(CVec3 a, std::complex<double> s) { return a *= s; }
inline CVec3 operator*(std::complex<double> s, CVec3 a) { return a *= s; }
inline CVec3 operator*(CVec3 a, double s) { return a *= std::complex<double>(s, 0.0); }
inline CVec3 operator*(double s, CVec3 a) { return a *= std::complex<double>(s, 0.0); }
inline CVec3 operator-(const CVec3& a) { return {-a.x, -a.y, -a.z}; }

inline CVec3 conj(const CVec3& a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }

/// Bilinear (unconjugated) dot product; conjugate explicitly where needed.
inline std::complex<double> dot(const CVec3& a, const CVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline std::complex<double> dot(const Vec3& a, const CVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline CVec3 cross(const Vec3& a, const CVec3& b) { return cross(CVec3(a), b); }

inline double norm2(const CVec3& a) {
    return std::norm(a.x) + std::norm(a.y) + std::norm(a.z);
}
inline double norm(const CVec3& a) { return std::sqrt(norm2(a)); }

}  // namespace emknot
