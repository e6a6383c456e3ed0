#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qd/errors.hpp"
#include "qd/span.hpp"

using namespace qd;

TEST_CASE("constant span element reproduces 1") {
    auto disc = Domain::unit_disc();
    SpanElement one = constant_span_element(disc);
    REQUIRE(one.terms().size() == 1);
    CHECK(std::abs(one.terms()[0].coefficient - complex(kPi)) < 1e-14);
    for (complex z : {complex(0.0), complex(0.5, 0.2), complex(-0.7, 0.1)})
        CHECK(std::abs(one.evaluate({z}) - complex(1.0)) < 1e-13);

    auto bidisc = Domain::unit_polydisc(2);
    SpanElement one2 = constant_span_element(bidisc);
    CHECK(std::abs(one2.terms()[0].coefficient - complex(kPi * kPi)) < 1e-13);
    CHECK(std::abs(one2.evaluate(point2(0.3, -0.4)) - complex(1.0)) < 1e-13);
}

TEST_CASE("terms merge and evaluation is linear") {
    auto disc = Domain::unit_disc();
    SpanElement a(disc, {SpanTerm{{complex(0.0)}, MultiIndex({0}), kPi},
                         SpanTerm{{complex(0.0)}, MultiIndex({0}), kPi}});
    CHECK(a.terms().size() == 1);
    CHECK(std::abs(a.terms()[0].coefficient - complex(2.0 * kPi)) < 1e-14);

    // pi K(., 0) + 0.3 pi d/dwbar K(., 0) evaluates to 1 + 0.6 z
    SpanElement b(disc, {SpanTerm{{complex(0.0)}, MultiIndex({0}), kPi},
                         SpanTerm{{complex(0.0)}, MultiIndex({1}), 0.3 * kPi}});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-0.6, 0.6);
    for (int k = 0; k < 30; ++k) {
        complex z(unif(rng), unif(rng));
        CHECK(std::abs(b.evaluate({z}) - (1.0 + 0.6 * z)) < 1e-12);
    }
}

TEST_CASE("span node outside the domain is rejected") {
    auto disc = Domain::unit_disc();
    CHECK_THROWS_AS(SpanElement(disc, {SpanTerm{{complex(2.0)}, MultiIndex({0}), 1.0}}), Error);
}

TEST_CASE("product_span: constants and mixed terms") {
    auto d1 = Domain::unit_disc(), d2 = Domain::unit_disc();
    SpanElement one1 = constant_span_element(d1), one2 = constant_span_element(d2);
    SpanElement prod = product_span({one1, one2});
    CHECK(prod.terms().size() == 1);
    CHECK(std::abs(prod.evaluate(point2(0.2, -0.5)) - complex(1.0)) < 1e-12);

    // factor representing z on the first axis, 1 on the second
    SpanElement zrep(d1, {SpanTerm{{complex(0.0)}, MultiIndex({1}), kPi / 2.0}});
    CHECK(std::abs(zrep.evaluate({complex(0.4)}) - complex(0.4)) < 1e-13);
    SpanElement prod_z = product_span({zrep, one2});
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(-0.6, 0.6);
    for (int k = 0; k < 50; ++k) {
        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        CHECK(std::abs(prod_z.evaluate(z) - z[0]) < 1e-12);
    }

    // two 2-term factors: at most 4 merged terms, product matches numerically
    SpanElement f1(d1, {SpanTerm{{complex(0.0)}, MultiIndex({0}), kPi},
                        SpanTerm{{complex(0.0)}, MultiIndex({1}), 0.25 * kPi}});
    SpanElement f2(d2, {SpanTerm{{complex(0.0)}, MultiIndex({0}), 2.0 * kPi},
                        SpanTerm{{complex(0.1)}, MultiIndex({0}), 0.5}});
    SpanElement p = product_span({f1, f2});
    CHECK(p.terms().size() <= 4);
    for (int k = 0; k < 100; ++k) {
        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        complex want = f1.evaluate({z[0]}) * f2.evaluate({z[1]});
        CHECK(std::abs(p.evaluate(z) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("membership: constants and polynomials are found immediately") {
    auto disc = Domain::unit_disc();
    auto nodes = membership_node_grid(*disc, 1);
    REQUIRE(nodes.size() == 1);

    MembershipTrace t1 = membership_residual(Expr::constant(1.0, 1), disc, nodes, 2);
    CHECK(t1.verdict == MembershipVerdict::InSpan);
    CHECK(t1.levels[0].residual < 1e-10);

    // 1 + 0.6 z needs the first derivative level
    Expr cand = Expr::constant(1.0, 1) + Expr::constant(0.6, 1) * Expr::var(0, 1);
    MembershipTrace t2 = membership_residual(cand, disc, nodes, 3);
    CHECK(t2.verdict == MembershipVerdict::InSpan);
    CHECK(t2.levels[0].residual > 1e-3);  // order 0 cannot represent z
    CHECK(t2.levels[1].residual < 1e-10); // order 1 is exact
    REQUIRE(t2.fitted.has_value());
    CHECK(std::abs(t2.fitted->evaluate({complex(0.5)}) - cand.eval({complex(0.5)})) < 1e-9);
}

TEST_CASE("membership trace residuals are non-increasing") {
    auto bidisc = Domain::unit_polydisc(2);
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    Expr candidate = Expr::exp_of(Expr::constant(0.4, 2) * z1) + Expr::int_pow(z2, 2);
    MembershipTrace t = membership_residual(candidate, bidisc, membership_node_grid(*bidisc, 2), 5);
    double prev = 2.0;
    for (auto& level : t.levels) {
        if (level.skipped) continue;
        CHECK(level.residual <= prev + 1e-12);
        prev = level.residual;
    }
}

TEST_CASE("positive control: explicit span elements come back in_span") {
    auto bidisc = Domain::unit_polydisc(2);
    auto nodes = membership_node_grid(*bidisc, 3);
    // build an element whose nodes sit on the default lattice
    SpanElement control(bidisc, {SpanTerm{point2(0.0, 0.0), MultiIndex({0, 0}), kPi * kPi},
                                 SpanTerm{point2(0.0, 0.0), MultiIndex({1, 1}), complex(1.0, 0.5)},
                                 SpanTerm{nodes[1], MultiIndex({0, 1}), complex(-0.4, 0.2)}});
    MembershipTrace t = membership_residual(control.as_expr(), bidisc, nodes, 3);
    CHECK(t.verdict == MembershipVerdict::InSpan);
    CHECK(t.best_residual < 1e-8);
}

TEST_CASE("negative control: the Bergman-coordinate Jacobian plateaus") {
    auto bidisc = Domain::unit_polydisc(2);
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    Expr u = -(Expr::constant(1.0, 2) / Expr::int_pow(Expr::constant(3.0, 2) - z1 - z2, 2));
    MembershipTrace t = membership_residual(u, bidisc, membership_node_grid(*bidisc, 3), 5);
    CHECK(t.verdict == MembershipVerdict::NotInSpan);
    int computed = 0;
    for (auto& level : t.levels)
        if (!level.skipped) ++computed;
    REQUIRE(computed >= 3);
    for (std::size_t i = t.levels.size() - 3; i < t.levels.size(); ++i)
        if (!t.levels[i].skipped) CHECK(t.levels[i].residual > 1e-3);
}

TEST_CASE("membership of the zero function") {
    auto disc = Domain::unit_disc();
    MembershipTrace t =
        membership_residual(Expr::constant(0.0, 1), disc, membership_node_grid(*disc, 1), 1);
    CHECK(t.verdict == MembershipVerdict::InSpan);
    CHECK(t.best_residual == 0.0);
}
