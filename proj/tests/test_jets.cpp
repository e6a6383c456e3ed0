#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qd/errors.hpp"
#include "qd/expr.hpp"
#include "qd/jet.hpp"

using namespace qd;
using qd::testing::fd_derivative;

namespace {

Expr var1() { return Expr::var(0, 1); }

double rel_err(complex got, complex want) {
    double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}

} // namespace

TEST_CASE("multi-index enumeration is graded and complete") {
    auto list = enumerate_multi_indices(2, 3);
    CHECK(list.size() == 10); // C(2+3,2)
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] < list[i]);
    auto table = SimplexTable::get(2, 3);
    for (int i = 0; i < table->size(); ++i) CHECK(table->index_of(table->at(i)) == i);
    CHECK(table->index_of(MultiIndex({2, 2})) == -1);
}

TEST_CASE("jet_lift of z^2 at 0") {
    Expr f = Expr::int_pow(var1(), 2);
    Jet j = jet_lift(f, {complex(0.0)}, 2);
    CHECK(std::abs(j.coefficient(MultiIndex({0}))) < 1e-15);
    CHECK(std::abs(j.coefficient(MultiIndex({1}))) < 1e-15);
    CHECK(std::abs(j.coefficient(MultiIndex({2})) - complex(1.0)) < 1e-15);
}

TEST_CASE("jet_lift of e^{z1+z2} + z1 at the origin, order 1") {
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    Expr f = Expr::exp_of(z1 + z2) + z1;
    Jet j = jet_lift(f, point2(0.0, 0.0), 1);
    CHECK(std::abs(j.coefficient(MultiIndex({0, 0})) - complex(1.0)) < 1e-15);
    CHECK(std::abs(j.coefficient(MultiIndex({1, 0})) - complex(2.0)) < 1e-15);
    CHECK(std::abs(j.coefficient(MultiIndex({0, 1})) - complex(1.0)) < 1e-15);
}

TEST_CASE("jet_lift of 1/(3-z): geometric Taylor coefficients") {
    Expr f = Expr::constant(1.0, 1) / (Expr::constant(3.0, 1) - var1());
    Jet j = jet_lift(f, {complex(0.0)}, 2);
    CHECK(rel_err(j.coefficient(MultiIndex({0})), 1.0 / 3.0) < 1e-14);
    CHECK(rel_err(j.coefficient(MultiIndex({1})), 1.0 / 9.0) < 1e-14);
    CHECK(rel_err(j.coefficient(MultiIndex({2})), 1.0 / 27.0) < 1e-14);
    // finite-difference cross-check at the spec's step
    auto fn = [&](const Point& p) { return f.eval(p); };
    complex fd2 = qd::testing::central_diff_2(fn, {complex(0.0)}, 0);
    CHECK(std::abs(derivative_at(j, MultiIndex({2})) - fd2) / std::abs(fd2) < 1e-6);
}

TEST_CASE("PoleAtCenter when a denominator vanishes at the expansion point") {
    Expr f = Expr::constant(1.0, 1) / var1();
    CHECK_THROWS_AS((void)jet_lift(f, {complex(0.0)}, 2), Error);
}

TEST_CASE("jet_multiply basics") {
    Point c{complex(0.0)};
    Jet z = Jet::variable(c, 2, 0);
    Jet z2 = jet_multiply(z, z);
    CHECK(std::abs(z2.coefficient(MultiIndex({2})) - complex(1.0)) < 1e-15);

    Jet one = Jet::constant(c, 2, 1.0);
    Jet same = jet_multiply(one, z);
    CHECK(std::abs(same.coefficient(MultiIndex({1})) - complex(1.0)) < 1e-15);

    // (1+z)(1-z) = 1 - z^2
    Jet a = one + z; // 1 + z
    Jet b = one - z;
    Jet p = jet_multiply(a.truncated(3), b.truncated(3));
    CHECK(std::abs(p.coefficient(MultiIndex({0})) - complex(1.0)) < 1e-15);
    CHECK(std::abs(p.coefficient(MultiIndex({1}))) < 1e-15);
    CHECK(std::abs(p.coefficient(MultiIndex({2})) + complex(1.0)) < 1e-15);
}

TEST_CASE("jet_multiply center mismatch") {
    Jet a = Jet::variable({complex(0.0)}, 2, 0);
    Jet b = Jet::variable({complex(1.0)}, 2, 0);
    CHECK_THROWS_AS((void)jet_multiply(a, b), Error);
}

TEST_CASE("jet_compose: (1+z)^2 via outer w^2 at 1") {
    Expr w2 = Expr::int_pow(var1(), 2);
    Jet outer = jet_lift(w2, {complex(1.0)}, 2);
    Expr inner_e = Expr::constant(1.0, 1) + var1();
    Jet inner = jet_lift(inner_e, {complex(0.0)}, 2);
    Jet comp = jet_compose(outer, {inner});
    CHECK(std::abs(comp.coefficient(MultiIndex({0})) - complex(1.0)) < 1e-14);
    CHECK(std::abs(comp.coefficient(MultiIndex({1})) - complex(2.0)) < 1e-14);
    CHECK(std::abs(comp.coefficient(MultiIndex({2})) - complex(1.0)) < 1e-14);
}

TEST_CASE("jet_compose: identity outer returns inner") {
    Jet inner = jet_lift(Expr::int_pow(var1(), 2) + Expr::constant(0.5, 1), {complex(0.2)}, 3);
    Jet outer = Jet::variable({inner.value()}, 3, 0);
    Jet comp = jet_compose(outer, {inner});
    for (int i = 0; i < comp.table().size(); ++i)
        CHECK(std::abs(comp.coeff_at(i) - inner.coeff_at(i)) < 1e-14);
}

TEST_CASE("jet_compose: e^{z1+z2} coefficients through order 2") {
    Expr ew = Expr::exp_of(var1());
    Jet outer = jet_lift(ew, {complex(0.0)}, 2);
    Expr s = Expr::var(0, 2) + Expr::var(1, 2);
    Jet inner = jet_lift(s, point2(0.0, 0.0), 2);
    Jet comp = jet_compose(outer, {inner});
    CHECK(rel_err(comp.coefficient(MultiIndex({0, 0})), 1.0) < 1e-14);
    CHECK(rel_err(comp.coefficient(MultiIndex({1, 0})), 1.0) < 1e-14);
    CHECK(rel_err(comp.coefficient(MultiIndex({0, 1})), 1.0) < 1e-14);
    CHECK(rel_err(comp.coefficient(MultiIndex({2, 0})), 0.5) < 1e-14);
    CHECK(rel_err(comp.coefficient(MultiIndex({1, 1})), 1.0) < 1e-14);
    CHECK(rel_err(comp.coefficient(MultiIndex({0, 2})), 0.5) < 1e-14);
    // finite-difference cross-check on the mixed term
    Expr direct = Expr::exp_of(Expr::var(0, 2) + Expr::var(1, 2));
    auto fn = [&](const Point& p) { return direct.eval(p); };
    complex fd = fd_derivative(fn, point2(0.0, 0.0), MultiIndex({1, 1}));
    CHECK(rel_err(derivative_at(comp, MultiIndex({1, 1})), fd) < 1e-6);
}

TEST_CASE("jet_compose center chain mismatch") {
    Jet outer = jet_lift(Expr::int_pow(var1(), 2), {complex(1.0)}, 2);
    Jet inner = jet_lift(var1(), {complex(0.0)}, 2); // constant term 0 != 1
    CHECK_THROWS_AS((void)jet_compose(outer, {inner}), Error);
}

TEST_CASE("derivative_at: alpha! scaling and bounds") {
    Jet j = jet_lift(Expr::int_pow(var1(), 2), {complex(0.0)}, 2);
    CHECK(std::abs(derivative_at(j, MultiIndex({2})) - complex(2.0)) < 1e-14);
    CHECK(std::abs(derivative_at(j, MultiIndex({0})) - complex(0.0)) < 1e-14);
    CHECK_THROWS_AS((void)derivative_at(j, MultiIndex({3})), Error);

    Expr g = Expr::constant(1.0, 2) /
             (Expr::constant(3.0, 2) - Expr::var(0, 2) - Expr::var(1, 2));
    Jet jg = jet_lift(g, point2(0.0, 0.0), 2);
    CHECK(rel_err(derivative_at(jg, MultiIndex({1, 1})), 2.0 / 27.0) < 1e-12);
}

TEST_CASE("property: jet derivatives match symmetric stencils on random closed forms") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(-0.4, 0.4);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // random rational-exp composite in two variables
        complex a(unif(rng), unif(rng)), b(unif(rng), unif(rng)), c(unif(rng), unif(rng));
        Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
        Expr f = Expr::exp_of(Expr::constant(a, 2) * z1 + Expr::constant(b, 2) * z2) +
                 Expr::constant(1.0, 2) /
                     (Expr::constant(complex(2.5, 0.0), 2) - Expr::constant(c, 2) * z1 - z2);
        Point center{complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng))};
        int o1 = trial % 4, o2 = (trial / 4) % 3;
        if (o1 + o2 == 0) o1 = 1;
        MultiIndex alpha({o1, o2});
        Jet j = jet_lift(f, center, alpha.degree());
        auto fn = [&](const Point& p) { return f.eval(p); };
        complex fd = fd_derivative(fn, center, alpha);
        CHECK(rel_err(derivative_at(j, alpha), fd) < 1e-5);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("property: multiplication commutes and associates") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Point c = point2(0.1, -0.2);
    for (int trial = 0; trial < 20; ++trial) {
        Jet a(c, 4), b(c, 4), d(c, 4);
        for (int i = 0; i < a.table().size(); ++i) {
            a.coeff_at(i) = complex(unif(rng), unif(rng));
            b.coeff_at(i) = complex(unif(rng), unif(rng));
            d.coeff_at(i) = complex(unif(rng), unif(rng));
        }
        Jet ab = jet_multiply(a, b), ba = jet_multiply(b, a);
        for (int i = 0; i < ab.table().size(); ++i)
            CHECK(std::abs(ab.coeff_at(i) - ba.coeff_at(i)) < 1e-12);
        Jet left = jet_multiply(jet_multiply(a, b), d);
        Jet right = jet_multiply(a, jet_multiply(b, d));
        for (int i = 0; i < left.table().size(); ++i)
            CHECK(std::abs(left.coeff_at(i) - right.coeff_at(i)) < 1e-12);
    }
}

TEST_CASE("property: composition agrees with lifting the composed expression") {
    Expr z = var1();
    Expr outer = Expr::exp_of(z) * (Expr::constant(1.0, 1) + z);
    Expr inner = Expr::constant(0.3, 1) * Expr::int_pow(z, 2) + Expr::constant(0.4, 1) * z;
    Expr direct = Expr::compose(outer, {inner});

    Jet inner_jet = jet_lift(inner, {complex(0.1)}, 5);
    Jet outer_jet = jet_lift(outer, {inner_jet.value()}, 5);
    Jet composed = jet_compose(outer_jet, {inner_jet});
    Jet lifted = jet_lift(direct, {complex(0.1)}, 5);
    for (int i = 0; i < composed.table().size(); ++i)
        CHECK(std::abs(composed.coeff_at(i) - lifted.coeff_at(i)) < 1e-10);
}

TEST_CASE("expression derivative and conjugation") {
    Expr z = var1();
    Expr f = Expr::exp_of(Expr::constant(complex(0.0, 2.0), 1) * z) / (Expr::constant(2.0, 1) - z);
    Expr df = f.derivative(0);
    auto fn = [&](const Point& p) { return f.eval(p); };
    complex fd = qd::testing::central_diff_1(fn, {complex(0.3, 0.1)}, 0);
    CHECK(rel_err(df.eval({complex(0.3, 0.1)}), fd) < 1e-8);

    Expr fbar = f.conjugated();
    complex z0(0.25, -0.4);
    CHECK(std::abs(fbar.eval({std::conj(z0)}) - std::conj(f.eval({z0}))) < 1e-14);
}

TEST_CASE("expression JSON parsing round trip") {
    nlohmann::json spec = {{"exp", {{"add", {"z1", "z2"}}}}};
    Expr f = parse_expr(spec, 2);
    CHECK(std::abs(f.eval(point2(0.0, 0.0)) - complex(1.0)) < 1e-15);
    CHECK(std::abs(f.eval(point2(0.5, 0.5)) - std::exp(complex(1.0))) < 1e-14);

    Expr g = parse_expr(f.to_json(), 2);
    CHECK(std::abs(g.eval(point2(0.3, -0.2)) - f.eval(point2(0.3, -0.2))) < 1e-14);
}

TEST_CASE("span_integral expression: value, jets, derivative") {
    // U(z1, z2) = int_0^{z2} (1 + 0.4 tau) dtau = z2 + 0.2 z2^2
    Expr g = Expr::constant(1.0, 2) + Expr::constant(0.4, 2) * Expr::var(1, 2);
    Expr U = Expr::span_integral(g, Expr::constant(0.0, 1));
    Point z = point2(0.3, complex(0.5, 0.2));
    complex expect = z[1] + 0.2 * z[1] * z[1];
    CHECK(std::abs(U.eval(z) - expect) < 1e-13);

    Jet j = jet_lift(U, z, 2);
    CHECK(std::abs(derivative_at(j, MultiIndex({0, 1})) - (1.0 + 0.4 * z[1])) < 1e-12);
    CHECK(std::abs(derivative_at(j, MultiIndex({1, 0}))) < 1e-12);

    Expr dU = U.derivative(1);
    CHECK(std::abs(dU.eval(z) - (1.0 + 0.4 * z[1])) < 1e-12);
}
