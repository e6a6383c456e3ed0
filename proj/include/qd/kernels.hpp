///////////////////////////////////////////////////////////////////////////////
// kernels.hpp
//
// closed-form Bergman kernels (Lebesgue-measure normalization, validated via
// the reproducing property), antiholomorphic derivatives at nodes, and the
// transformation formula for mapped domains.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include "qd/expr.hpp"
#include "qd/geometry.hpp"
#include "qd/maps.hpp"
#include "qd/multi_index.hpp"

namespace qd {

/// highest kernel-derivative order served (span elements in the worked
/// examples use orders <= 3; headroom for degree-6 QDP tables)
inline constexpr int kMaxKernelDerivativeOrder = 8;

struct KernelHandle {
    DomainPtr domain;
};

/// K(z, w); discs/polydiscs/balls/products in closed form, images via the
/// transformation formula
complex kernel_eval(const KernelHandle& h, const Point& z, const Point& w);

/// d^alpha/d wbar^alpha K(z, w) at w = node
complex kernel_derivative(const KernelHandle& h, const Point& z, const Point& node,
                          const MultiIndex& alpha);

/// K(z, w) for fixed z as a holomorphic expression in v := conj(w)
Expr kernel_wbar_expr(const KernelHandle& h, const Point& z);

/// d^alpha/d wbar^alpha K(., node) as a holomorphic expression in z
/// (closed-form domains; images only for alpha = 0 with a registered inverse)
Expr kernel_z_expr(const KernelHandle& h, const Point& node, const MultiIndex& alpha);

/// K_{f(B)}(zeta, omega) = K_B(F(zeta), F(omega)) / (u(F(zeta)) conj(u(F(omega))))
complex transform_kernel(const HolomorphicMap& f, DomainPtr base, const Point& zeta,
                         const Point& omega);

} // namespace qd
