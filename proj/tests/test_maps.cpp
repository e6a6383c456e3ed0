#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qd/errors.hpp"
#include "qd/maps.hpp"

using namespace qd;

TEST_CASE("evaluate named maps") {
    HolomorphicMap f = exp_counterexample_map();
    Point v = f.evaluate(point2(0.0, 0.0));
    CHECK(std::abs(v[0] - complex(1.0)) < 1e-15);
    CHECK(std::abs(v[1]) < 1e-15);

    HolomorphicMap id = HolomorphicMap::identity(2);
    Point w = id.evaluate(point2(0.3, -0.2));
    CHECK(std::abs(w[0] - complex(0.3)) < 1e-15);

    HolomorphicMap b = bergman_coordinate_map();
    Point u = b.evaluate(point2(0.0, 0.0));
    CHECK(std::abs(u[0] - complex(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(u[1]) < 1e-15);
}

TEST_CASE("jacobian determinants of the named maps") {
    HolomorphicMap e = exp_counterexample_map();
    for (auto z : {point2(0.0, 0.0), point2(0.3, -0.4), point2(complex(0.1, 0.6), complex(-0.2, 0.2))})
        CHECK(std::abs(jacobian_determinant(e, z) - complex(1.0)) < 1e-13);

    HolomorphicMap q = one_point_qdp_map();
    CHECK(std::abs(jacobian_determinant(q, point2(0.0, 0.0)) - complex(1.0)) < 1e-14);
    CHECK(std::abs(jacobian_determinant(q, point2(0.2, 0.1)) - complex(1.4)) < 1e-14);

    HolomorphicMap b = bergman_coordinate_map();
    CHECK(std::abs(jacobian_determinant(b, point2(0.0, 0.0)) - complex(-1.0 / 9.0)) < 1e-14);
}

TEST_CASE("jacobian_expr matches the jet route") {
    HolomorphicMap b = bergman_coordinate_map();
    Expr u = b.jacobian_expr();
    for (auto z : {point2(0.0, 0.0), point2(0.4, -0.3)})
        CHECK(std::abs(u.eval(z) - jacobian_determinant(b, z)) < 1e-13);
}

TEST_CASE("property: Jacobian of a composition is the product along the chain") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unif(-0.3, 0.3);
    for (int trial = 0; trial < 50; ++trial) {
        complex a(unif(rng), unif(rng)), b(unif(rng), unif(rng));
        Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
        HolomorphicMap f({z1 + Expr::constant(a, 2) * Expr::int_pow(z2, 2),
                          z2 + Expr::constant(b, 2) * Expr::int_pow(z1, 2)});
        HolomorphicMap g = exp_counterexample_map();
        // g o f as expression composition
        std::vector<Expr> comps;
        for (int i = 0; i < 2; ++i) comps.push_back(Expr::compose(g.component(i), f.components()));
        HolomorphicMap gof(std::move(comps));

        Point z = point2(complex(unif(rng), unif(rng)), complex(unif(rng), unif(rng)));
        complex lhs = jacobian_determinant(gof, z);
        complex rhs = jacobian_determinant(g, f.evaluate(z)) * jacobian_determinant(f, z);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("invert_at: registered closed-form inverse") {
    HolomorphicMap f = exp_counterexample_map();
    Point z = invert_at(f, point2(1.0, 0.0), point2(0.0, 0.0));
    CHECK(norm2(z) < 1e-14);
    // round trip through the inverse on samples
    auto bidisc = Domain::unit_polydisc(2);
    for (auto& p : sample_interior(*bidisc, SampleStrategy::QuasiRandom, 20, 4)) {
        Point back = invert_at(f, f.evaluate(p), point2(0.0, 0.0));
        CHECK(dist(back, p) < 1e-12);
    }
}

TEST_CASE("invert_at: Newton on the quadratic disc map") {
    HolomorphicMap f = quadratic_disc_map(0.3);
    Point z = invert_at(f, {complex(0.33)}, {complex(0.3)}, 1e-12);
    // quadratic-formula oracle: root of 0.3 z^2 + z - 0.33 inside the disc
    double root = (-1.0 + std::sqrt(1.0 + 4.0 * 0.3 * 0.33)) / (2.0 * 0.3);
    CHECK(std::abs(z[0] - root) < 1e-10);

    HolomorphicMap id = HolomorphicMap::identity(1);
    CHECK(std::abs(invert_at(id, {complex(0.7, -0.2)}, {complex(0.0)})[0] - complex(0.7, -0.2)) <
          1e-12);
}

TEST_CASE("injectivity_scan: identity and the z^2 witness") {
    auto disc = Domain::unit_disc();
    HolomorphicMap id = HolomorphicMap::identity(1);
    InjectivityReport rep = injectivity_scan(id, *disc, 200);
    CHECK(rep.injective_on_sample);
    CHECK(rep.min_pair_separation_ratio == doctest::Approx(1.0).epsilon(1e-12));

    HolomorphicMap sq({Expr::int_pow(Expr::var(0, 1), 2)}, disc);
    InjectivityReport rep2 = injectivity_scan(sq, *disc, 200);
    CHECK(!rep2.injective_on_sample);
    REQUIRE(rep2.witness.has_value());
    auto [a, b] = *rep2.witness;
    CHECK(dist(a, b) > 1e-6);
    CHECK(std::abs(sq.evaluate(a)[0] - sq.evaluate(b)[0]) < 1e-9);
}

TEST_CASE("injectivity_scan: polydisc neighborhood of the one-point map") {
    auto delta = Domain::polydisc({Disc{0.0, 0.4}, Disc{0.0, 0.4}});
    HolomorphicMap f = one_point_qdp_map();
    InjectivityReport rep = injectivity_scan(f, *delta, 200);
    CHECK(rep.injective_on_sample);
}

TEST_CASE("divided_difference_min") {
    auto disc = Domain::unit_disc();
    HolomorphicMap id = HolomorphicMap::identity(1);
    CHECK(divided_difference_min(id, *disc).min_abs == doctest::Approx(1.0).epsilon(1e-12));

    HolomorphicMap twice({Expr::constant(2.0, 1) * Expr::var(0, 1)}, disc);
    CHECK(divided_difference_min(twice, *disc).min_abs == doctest::Approx(2.0).epsilon(1e-12));

    // boundary-minimization oracle: inf |1 + 0.3 (z + w)| = 0.4 at z = w = -1
    HolomorphicMap f = quadratic_disc_map(0.3);
    DividedDifferenceResult res = divided_difference_min(f, *disc);
    CHECK(res.min_abs == doctest::Approx(0.4).epsilon(2e-3));
    CHECK(std::abs(res.argmin_z - complex(-1.0)) < 0.1);
}

TEST_CASE("map JSON parsing") {
    nlohmann::json spec = nlohmann::json::parse(R"([
        {"add": [{"exp": {"add": ["z1", "z2"]}}, "z1"]},
        {"add": ["z1", "z2"]}
    ])");
    HolomorphicMap f = parse_map(spec, 2);
    HolomorphicMap ref = exp_counterexample_map();
    Point z = point2(complex(0.2, 0.1), complex(-0.3, 0.4));
    CHECK(dist(f.evaluate(z), ref.evaluate(z)) < 1e-14);
}
