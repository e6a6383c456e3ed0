#include "qd/kernels.hpp"

#include <cmath>

#include "qd/errors.hpp"

namespace qd {

namespace {

double int_pow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

complex cpow_int(complex x, int k) {
    complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void check_inside(const Domain& d, const Point& p, const char* who) {
    if (!d.as<ImageSpec>() && !contains(d, p)) fail(ErrorCode::OutsideDomain, who);
}

} // namespace

complex kernel_eval(const KernelHandle& h, const Point& z, const Point& w) {
    const Domain& dom = *h.domain;
    if (static_cast<int>(z.size()) != dom.dimension() || static_cast<int>(w.size()) != dom.dimension())
        fail(ErrorCode::DimensionMismatch, "kernel_eval: point dimensions");
    check_inside(dom, z, "kernel_eval: z outside domain");
    check_inside(dom, w, "kernel_eval: w outside domain");

    if (auto* d = dom.as<Disc>()) {
        complex q = d->radius * d->radius - (z[0] - d->center) * std::conj(w[0] - d->center);
        return d->radius * d->radius / (kPi * q * q);
    }
    if (auto* p = dom.as<PolydiscSpec>()) {
        complex prod = 1.0;
        for (std::size_t i = 0; i < p->axes.size(); ++i) {
            const Disc& ax = p->axes[i];
            complex q = ax.radius * ax.radius - (z[i] - ax.center) * std::conj(w[i] - ax.center);
            prod *= ax.radius * ax.radius / (kPi * q * q);
        }
        return prod;
    }
    if (auto* b = dom.as<BallSpec>()) {
        Point zc = z, wc = w;
        for (int i = 0; i < b->n; ++i) {
            zc[i] -= b->center[i];
            wc[i] -= b->center[i];
        }
        complex q = b->radius * b->radius - hermitian_dot(zc, wc);
        return factorial(b->n) * b->radius * b->radius / (int_pow(kPi, b->n) * cpow_int(q, b->n + 1));
    }
    if (auto* p = dom.as<ProductSpec>()) {
        complex prod = 1.0;
        for (std::size_t i = 0; i < p->factors.size(); ++i)
            prod *= kernel_eval(KernelHandle{p->factors[i]}, {z[i]}, {w[i]});
        return prod;
    }
    if (auto* im = dom.as<ImageSpec>()) return transform_kernel(*im->map, im->base, z, w);
    fail(ErrorCode::UnsupportedDomain, "kernel_eval: no closed-form kernel for this domain");
}

Expr kernel_wbar_expr(const KernelHandle& h, const Point& z) {
    const Domain& dom = *h.domain;
    const int n = dom.dimension();
    if (auto* d = dom.as<Disc>()) {
        Expr v = Expr::var(0, 1);
        Expr q = Expr::constant(d->radius * d->radius, 1) -
                 Expr::constant(z[0] - d->center, 1) * (v - Expr::constant(std::conj(d->center), 1));
        return Expr::constant(d->radius * d->radius / kPi, 1) / Expr::int_pow(q, 2);
    }
    if (auto* p = dom.as<PolydiscSpec>()) {
        Expr prod = Expr::constant(1.0, n);
        for (int i = 0; i < n; ++i) {
            const Disc& ax = p->axes[static_cast<std::size_t>(i)];
            Expr v = Expr::var(i, n);
            Expr q = Expr::constant(ax.radius * ax.radius, n) -
                     Expr::constant(z[i] - ax.center, n) * (v - Expr::constant(std::conj(ax.center), n));
            prod = prod * (Expr::constant(ax.radius * ax.radius / kPi, n) / Expr::int_pow(q, 2));
        }
        return prod;
    }
    if (auto* b = dom.as<BallSpec>()) {
        Expr s = Expr::constant(0.0, n);
        for (int i = 0; i < n; ++i)
            s = s + Expr::constant(z[i] - b->center[i], n) *
                        (Expr::var(i, n) - Expr::constant(std::conj(b->center[i]), n));
        Expr q = Expr::constant(b->radius * b->radius, n) - s;
        return Expr::constant(factorial(b->n) * b->radius * b->radius / int_pow(kPi, b->n), n) /
               Expr::int_pow(q, b->n + 1);
    }
    if (auto* p = dom.as<ProductSpec>()) {
        Expr prod = Expr::constant(1.0, n);
        for (int i = 0; i < n; ++i) {
            Expr factor = kernel_wbar_expr(KernelHandle{p->factors[static_cast<std::size_t>(i)]}, {z[i]});
            prod = prod * Expr::compose(factor, {Expr::var(i, n)});
        }
        return prod;
    }
    if (auto* im = dom.as<ImageSpec>()) {
        auto inv = im->map->registered_inverse();
        if (!inv)
            fail(ErrorCode::UnsupportedDomain,
                 "kernel derivatives on image domains need a registered closed-form inverse");
        // K_V(z, w) as a function of v = conj(w):
        //   K_B(F(z), Fbar(v)) / (u(F(z)) * ubar(Fbar(v)))
        Point Fz = inv->evaluate(z);
        std::vector<Expr> Fbar;
        for (auto& comp : inv->components()) Fbar.push_back(comp.conjugated());
        Expr base_expr = kernel_wbar_expr(KernelHandle{im->base}, Fz); // expr in conj(base point)
        Expr numer = Expr::compose(base_expr, Fbar);
        Expr ubar = im->map->jacobian_expr().conjugated();
        complex uFz = jacobian_determinant(*im->map, Fz);
        if (std::abs(uFz) < 1e-300) fail(ErrorCode::SingularJacobian, "kernel transform: u vanishes");
        return numer / (Expr::constant(uFz, n) * Expr::compose(ubar, Fbar));
    }
    fail(ErrorCode::UnsupportedDomain, "kernel_wbar_expr: no closed-form kernel for this domain");
}

complex kernel_derivative(const KernelHandle& h, const Point& z, const Point& node,
                          const MultiIndex& alpha) {
    const Domain& dom = *h.domain;
    if (alpha.dim() != dom.dimension()) fail(ErrorCode::DimensionMismatch, "kernel_derivative: alpha dim");
    if (alpha.degree() > kMaxKernelDerivativeOrder)
        fail(ErrorCode::OrderExceeded, "kernel_derivative: order beyond configured maximum");
    if (alpha.degree() == 0) return kernel_eval(h, z, node);
    check_inside(dom, z, "kernel_derivative: z outside domain");
    check_inside(dom, node, "kernel_derivative: node outside domain");

    Expr in_vbar = kernel_wbar_expr(h, z);
    Point vcenter(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) vcenter[i] = std::conj(node[i]);
    Jet jet = in_vbar.lift(vcenter, alpha.degree());
    return derivative_at(jet, alpha);
}

Expr kernel_z_expr(const KernelHandle& h, const Point& node, const MultiIndex& alpha) {
    const Domain& dom = *h.domain;
    const int n = dom.dimension();
    if (alpha.dim() != n) fail(ErrorCode::DimensionMismatch, "kernel_z_expr: alpha dim");

    if (auto* d = dom.as<Disc>()) {
        const int k = alpha.e[0];
        Expr z = Expr::var(0, 1);
        Expr zc = z - Expr::constant(d->center, 1);
        Expr q = Expr::constant(d->radius * d->radius, 1) -
                 zc * Expr::constant(std::conj(node[0] - d->center), 1);
        return Expr::constant(d->radius * d->radius * factorial(k + 1) / kPi, 1) * Expr::int_pow(zc, k) /
               Expr::int_pow(q, k + 2);
    }
    if (auto* p = dom.as<PolydiscSpec>()) {
        Expr prod = Expr::constant(1.0, n);
        for (int i = 0; i < n; ++i) {
            KernelHandle axis{Domain::disc(p->axes[static_cast<std::size_t>(i)].center,
                                           p->axes[static_cast<std::size_t>(i)].radius)};
            Expr factor = kernel_z_expr(axis, {node[i]}, MultiIndex({alpha.e[i]}));
            prod = prod * Expr::compose(factor, {Expr::var(i, n)});
        }
        return prod;
    }
    if (auto* p = dom.as<ProductSpec>()) {
        Expr prod = Expr::constant(1.0, n);
        for (int i = 0; i < n; ++i) {
            Expr factor = kernel_z_expr(KernelHandle{p->factors[static_cast<std::size_t>(i)]}, {node[i]},
                                        MultiIndex({alpha.e[i]}));
            prod = prod * Expr::compose(factor, {Expr::var(i, n)});
        }
        return prod;
    }
    if (auto* b = dom.as<BallSpec>()) {
        Expr s = Expr::constant(0.0, n);
        Expr mono = Expr::constant(1.0, n);
        for (int i = 0; i < n; ++i) {
            Expr zc = Expr::var(i, n) - Expr::constant(b->center[i], n);
            s = s + zc * Expr::constant(std::conj(node[i] - b->center[i]), n);
            mono = mono * Expr::int_pow(zc, alpha.e[i]);
        }
        Expr q = Expr::constant(b->radius * b->radius, n) - s;
        double coef = b->radius * b->radius * factorial(b->n + alpha.degree()) / int_pow(kPi, b->n);
        return Expr::constant(coef, n) * mono / Expr::int_pow(q, b->n + 1 + alpha.degree());
    }
    if (auto* im = dom.as<ImageSpec>()) {
        if (alpha.degree() != 0)
            fail(ErrorCode::UnsupportedDomain, "kernel_z_expr on image domains supports alpha = 0 only");
        auto inv = im->map->registered_inverse();
        if (!inv)
            fail(ErrorCode::UnsupportedDomain,
                 "kernel_z_expr on image domains needs a registered closed-form inverse");
        Point Fnode = inv->evaluate(node);
        Expr base_expr = kernel_z_expr(KernelHandle{im->base}, Fnode, MultiIndex::zeros(n));
        Expr numer = Expr::compose(base_expr, inv->components());
        Expr u = im->map->jacobian_expr();
        complex uFnode = jacobian_determinant(*im->map, Fnode);
        return numer /
               (Expr::compose(u, inv->components()) * Expr::constant(std::conj(uFnode), n));
    }
    fail(ErrorCode::UnsupportedDomain, "kernel_z_expr: no closed-form kernel for this domain");
}

complex transform_kernel(const HolomorphicMap& f, DomainPtr base, const Point& zeta,
                         const Point& omega) {
    auto Fzeta = invert_into(f, zeta, *base);
    auto Fomega = invert_into(f, omega, *base);
    if (!Fzeta || !Fomega) fail(ErrorCode::NonConvergedInverse, "transform_kernel: inversion failed");
    complex uz = jacobian_determinant(f, *Fzeta);
    complex uw = jacobian_determinant(f, *Fomega);
    if (std::abs(uz) < 1e-300 || std::abs(uw) < 1e-300)
        fail(ErrorCode::SingularJacobian, "transform_kernel: u vanishes at preimage");
    complex kb = kernel_eval(KernelHandle{std::move(base)}, *Fzeta, *Fomega);
    return kb / (uz * std::conj(uw));
}

} // namespace qd
