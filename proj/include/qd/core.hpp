///////////////////////////////////////////////////////////////////////////////
// core.hpp
//
// basic scalar/point types shared by all modules
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qd {

using complex = std::complex<double>;

/// point in C^n
using Point = std::vector<complex>;

inline constexpr double kPi = 3.14159265358979323846;

inline double abs_sq(complex z) { return std::norm(z); }

inline double norm2(const Point& p) {
    double s = 0.0;
    for (auto& z : p) s += std::norm(z);
    return std::sqrt(s);
}

inline double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

inline Point point1(complex z) { return Point{z}; }
inline Point point2(complex z1, complex z2) { return Point{z1, z2}; }

/// hermitian inner product sum z_j * conj(w_j)
inline complex hermitian_dot(const Point& z, const Point& w) {
    complex s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

} // namespace qd
