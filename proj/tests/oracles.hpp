///////////////////////////////////////////////////////////////////////////////
// oracles.hpp
//
// test-only independent oracles. These never call into the code paths they
// check: derivatives come from symmetric finite-difference stencils (plain
// central differences at low order, spectral circle stencils beyond, where
// plain stencils drown in roundoff), integrals from brute-force sums.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "qd/core.hpp"
#include "qd/multi_index.hpp"

namespace qd::testing {

using ScalarFn = std::function<complex(const Point&)>;

/// d/dz_v by central difference, step h
inline complex central_diff_1(const ScalarFn& f, Point z, int v, double h = 1e-5) {
    Point zp = z, zm = z;
    zp[v] += h;
    zm[v] -= h;
    return (f(zp) - f(zm)) / (2.0 * h);
}

/// d^2/dz_v^2 by central difference; the default step sits above the
/// double-precision roundoff floor for second differences
inline complex central_diff_2(const ScalarFn& f, Point z, int v, double h = 1e-4) {
    Point zp = z, zm = z;
    zp[v] += h;
    zm[v] -= h;
    return (f(zp) - 2.0 * f(z) + f(zm)) / (h * h);
}

/// k-th derivative in variable v via the symmetric circle stencil
/// (the spectral generalization of central differences for holomorphic
/// functions; M equally spaced symmetric samples of radius h)
inline complex circle_stencil(const ScalarFn& f, Point z, int v, int k, double h = 0.1, int M = 32) {
    complex acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * kPi * j / M;
        Point q = z;
        q[v] += h * std::exp(complex(0, th));
        acc += f(q) * std::exp(complex(0, -k * th));
    }
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return acc / static_cast<double>(M) * kfact / std::pow(h, k);
}

/// mixed derivative d^alpha f by nesting per-variable symmetric stencils.
/// Circle stencils are used throughout: nesting amplifies the inner stencil's
/// absolute noise by k!/h^k, so the tiny steps of plain central differences
/// would drown mixed high orders in roundoff.
inline complex fd_derivative(const ScalarFn& f, const Point& z, const MultiIndex& alpha) {
    ScalarFn cur = f;
    for (int v = 0; v < alpha.dim(); ++v) {
        int k = alpha.e[static_cast<std::size_t>(v)];
        if (k == 0) continue;
        ScalarFn prev = cur;
        int vv = v;
        cur = [prev, vv, k](const Point& q) { return circle_stencil(prev, q, vv, k, 0.25); };
    }
    return cur(z);
}

/// brute-force polar integration over the unit disc (midpoint; independent of
/// the library quadrature)
inline complex brute_disc_integral(const ScalarFn& f, int n_r = 400, int n_t = 400, double radius = 1.0) {
    complex acc = 0.0;
    for (int i = 0; i < n_r; ++i) {
        double rho = (i + 0.5) / n_r * radius;
        for (int j = 0; j < n_t; ++j) {
            double th = 2.0 * kPi * (j + 0.5) / n_t;
            acc += f({rho * std::exp(complex(0, th))}) * rho;
        }
    }
    return acc * (radius / n_r) * (2.0 * kPi / n_t);
}

} // namespace qd::testing
