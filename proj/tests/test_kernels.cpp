#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qd/errors.hpp"
#include "qd/kernels.hpp"

using namespace qd;
using qd::testing::circle_stencil;

TEST_CASE("closed-form kernel values") {
    KernelHandle disc{Domain::unit_disc()};
    CHECK(std::abs(kernel_eval(disc, {complex(0.0)}, {complex(0.0)}) - complex(1.0 / kPi)) < 1e-15);
    // K(z, 0) is constant in z on the unit disc
    CHECK(std::abs(kernel_eval(disc, {complex(0.5)}, {complex(0.0)}) - complex(1.0 / kPi)) < 1e-15);

    KernelHandle bidisc{Domain::unit_polydisc(2)};
    CHECK(std::abs(kernel_eval(bidisc, point2(0.0, 0.0), point2(0.0, 0.0)) -
                   complex(1.0 / (kPi * kPi))) < 1e-15);

    KernelHandle ball{Domain::unit_ball(2)};
    CHECK(std::abs(kernel_eval(ball, point2(0.0, 0.0), point2(0.0, 0.0)) -
                   complex(2.0 / (kPi * kPi))) < 1e-15);

    CHECK_THROWS_AS((void)kernel_eval(disc, {complex(1.5)}, {complex(0.0)}), Error);
}

TEST_CASE("product identity: bidisc kernel equals the product of disc kernels") {
    KernelHandle bidisc{Domain::unit_polydisc(2)};
    KernelHandle disc{Domain::unit_disc()};
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-0.6, 0.6);
    for (int trial = 0; trial < 50; ++trial) {
        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        Point w = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        complex lhs = kernel_eval(bidisc, z, w);
        complex rhs = kernel_eval(disc, {z[0]}, {w[0]}) * kernel_eval(disc, {z[1]}, {w[1]});
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("property: Hermitian symmetry at random pairs") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-0.34, 0.34); // inside the ball for either domain
    KernelHandle bidisc{Domain::unit_polydisc(2)};
    KernelHandle ball{Domain::unit_ball(2)};
    for (int trial = 0; trial < 1000; ++trial) {
        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        Point w = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        for (auto* h : {&bidisc, &ball}) {
            complex a = kernel_eval(*h, z, w);
            complex b = kernel_eval(*h, w, z);
            CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("kernel derivative on the unit disc: 2z/pi at the origin node") {
    KernelHandle disc{Domain::unit_disc()};
    for (complex z : {complex(0.3, 0.2), complex(-0.5, 0.1)}) {
        complex got = kernel_derivative(disc, {z}, {complex(0.0)}, MultiIndex({1}));
        CHECK(std::abs(got - 2.0 * z / kPi) < 1e-13);
        // alpha = 0 reduces to evaluation
        CHECK(std::abs(kernel_derivative(disc, {z}, {complex(0.0)}, MultiIndex({0})) -
                       kernel_eval(disc, {z}, {complex(0.0)})) < 1e-15);
    }
    // finite differences in wbar: K(z, .) as a function of conj(w)
    complex z(0.4, -0.3);
    auto fn = [&](const Point& v) {
        // v is conj(w)
        complex w = std::conj(v[0]);
        return kernel_eval(disc, {z}, {w});
    };
    complex fd = circle_stencil(fn, {complex(0.0)}, 0, 1, 0.2);
    CHECK(std::abs(kernel_derivative(disc, {z}, {complex(0.0)}, MultiIndex({1})) - fd) < 1e-9);
}

TEST_CASE("kernel derivative on the bidisc: product rule at (0,1)") {
    KernelHandle bidisc{Domain::unit_polydisc(2)};
    Point z = point2(complex(0.25, 0.1), complex(-0.4, 0.3));
    complex got = kernel_derivative(bidisc, z, point2(0.0, 0.0), MultiIndex({0, 1}));
    CHECK(std::abs(got - 2.0 * z[1] / (kPi * kPi)) < 1e-13);

    // cross-check against the z-expression route
    Expr col = kernel_z_expr(bidisc, point2(0.0, 0.0), MultiIndex({0, 1}));
    CHECK(std::abs(col.eval(z) - got) < 1e-13);
}

TEST_CASE("kernel derivatives at noncentral nodes agree across both routes") {
    KernelHandle bidisc{Domain::unit_polydisc(2)};
    Point node = point2(complex(0.2, -0.1), complex(-0.15, 0.25));
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    for (auto alpha : {MultiIndex({1, 0}), MultiIndex({2, 1}), MultiIndex({0, 3})}) {
        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        complex via_jets = kernel_derivative(bidisc, z, node, alpha);
        complex via_expr = kernel_z_expr(bidisc, node, alpha).eval(z);
        CHECK(std::abs(via_jets - via_expr) < 1e-10 * std::max(1.0, std::abs(via_jets)));
    }
}

TEST_CASE("ball kernel derivative matches the wbar stencil") {
    KernelHandle ball{Domain::unit_ball(2)};
    Point z = point2(complex(0.3, 0.1), complex(0.2, -0.2));
    Point node = point2(0.1, 0.05);
    MultiIndex alpha({1, 1});
    complex got = kernel_derivative(ball, z, node, alpha);

    auto fn = [&](const Point& v) {
        Point w = {std::conj(v[0]), std::conj(v[1])};
        return kernel_eval(ball, z, w);
    };
    auto fn_d1 = [&](const Point& v) { return circle_stencil(fn, v, 0, 1, 0.15); };
    complex fd = circle_stencil(fn_d1, {std::conj(node[0]), std::conj(node[1])}, 1, 1, 0.15);
    CHECK(std::abs(got - fd) < 1e-7 * std::max(1.0, std::abs(got)));
}

TEST_CASE("transform_kernel") {
    auto bidisc = Domain::unit_polydisc(2);
    auto f = std::make_shared<HolomorphicMap>(exp_counterexample_map());

    // identity map leaves the kernel unchanged
    auto id = std::make_shared<HolomorphicMap>(HolomorphicMap::identity(2));
    Point z = point2(0.2, -0.3), w = point2(-0.1, 0.4);
    KernelHandle hb{bidisc};
    CHECK(std::abs(transform_kernel(*id, bidisc, z, w) - kernel_eval(hb, z, w)) < 1e-12);

    // exp map at the image of the origin: K = 1/pi^2
    complex got = transform_kernel(*f, bidisc, point2(1.0, 0.0), point2(1.0, 0.0));
    CHECK(std::abs(got - complex(1.0 / (kPi * kPi))) < 1e-12);

    // scaling by 2: K at the center is 1/(4 pi)
    Expr two_z = Expr::constant(2.0, 1) * Expr::var(0, 1);
    auto scale = std::make_shared<HolomorphicMap>(std::vector<Expr>{two_z}, Domain::unit_disc());
    complex center = transform_kernel(*scale, Domain::unit_disc(), {complex(0.0)}, {complex(0.0)});
    CHECK(std::abs(center - complex(1.0 / (4.0 * kPi))) < 1e-12);
}

TEST_CASE("kernel derivatives on an image domain (registered inverse)") {
    auto bidisc = Domain::unit_polydisc(2);
    auto f = std::make_shared<HolomorphicMap>(exp_counterexample_map());
    auto V = Domain::image(bidisc, f);
    KernelHandle hv{V};

    // alpha = 0 agrees with the transformation formula
    Point zeta = f->evaluate(point2(0.2, 0.1));
    Point omega = f->evaluate(point2(-0.1, 0.3));
    CHECK(std::abs(kernel_derivative(hv, zeta, omega, MultiIndex({0, 0})) -
                   transform_kernel(*f, bidisc, zeta, omega)) < 1e-11);

    // first derivative vs a wbar stencil of the transformed kernel
    auto fn = [&](const Point& v) {
        Point w = {std::conj(v[0]), std::conj(v[1])};
        return transform_kernel(*f, bidisc, zeta, w);
    };
    complex fd = circle_stencil(fn, {std::conj(omega[0]), std::conj(omega[1])}, 1, 1, 0.1);
    complex got = kernel_derivative(hv, zeta, omega, MultiIndex({0, 1}));
    CHECK(std::abs(got - fd) < 1e-7 * std::max(1.0, std::abs(got)));
}
