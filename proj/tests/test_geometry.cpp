#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qd/errors.hpp"
#include "qd/geometry.hpp"
#include "qd/maps.hpp"

using namespace qd;

TEST_CASE("containment on canonical domains") {
    auto disc = Domain::unit_disc();
    CHECK(contains(*disc, {complex(0.0)}));
    CHECK(!contains(*disc, {complex(1.0)}));

    auto bidisc = Domain::unit_polydisc(2);
    CHECK(!contains(*bidisc, point2(0.5, 1.2)));
    CHECK(contains(*bidisc, point2(0.5, 0.5)));

    auto ball = Domain::unit_ball(2);
    CHECK(contains(*ball, point2(0.5, 0.5)));
    CHECK(!contains(*ball, point2(0.8, 0.8)));

    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.0, 0.3}});
    CHECK(!contains(*cd, {complex(0.2)}));      // inside the excluded hole
    CHECK(!contains(*cd, {complex(0.3)}));      // holes are closed
    CHECK(contains(*cd, {complex(0.5)}));
    CHECK(!contains(*cd, {complex(1.1)}));

    CHECK_THROWS_AS((void)contains(*disc, point2(0.0, 0.0)), Error);
}

TEST_CASE("circle domain invariants are validated") {
    CHECK_THROWS_AS((void)Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.9, 0.3}}), Error);
    CHECK_THROWS_AS(
        (void)Domain::circle_domain(Disc{0.0, 1.0}, {Disc{-0.4, 0.2}, Disc{-0.1, 0.15}}), Error);
}

TEST_CASE("image containment via Newton inversion") {
    auto disc = Domain::unit_disc();
    auto f = std::make_shared<HolomorphicMap>(quadratic_disc_map(0.3));
    auto img = Domain::image(disc, f);
    // forward images of interior points are inside
    for (auto& z : sample_interior(*disc, SampleStrategy::QuasiRandom, 25, 3))
        CHECK(contains(*img, f->evaluate(z)));
    // a point far outside the image
    CHECK(!contains(*img, {complex(5.0)}));
}

TEST_CASE("sample_interior: containment, count, determinism") {
    auto disc = Domain::unit_disc();
    auto pts = sample_interior(*disc, SampleStrategy::TensorGrid, 4);
    CHECK(pts.size() >= 4);
    for (auto& p : pts) CHECK(contains(*disc, p));

    auto ball = Domain::unit_ball(2);
    auto qpts = sample_interior(*ball, SampleStrategy::QuasiRandom, 100, 5);
    CHECK(qpts.size() == 100);
    for (auto& p : qpts) CHECK(contains(*ball, p));

    auto again = sample_interior(*ball, SampleStrategy::QuasiRandom, 100, 5);
    for (std::size_t i = 0; i < qpts.size(); ++i) CHECK(dist(qpts[i], again[i]) == 0.0);
    auto other_seed = sample_interior(*ball, SampleStrategy::QuasiRandom, 100, 6);
    CHECK(dist(qpts[0], other_seed[0]) > 0.0);
}

TEST_CASE("sample_interior on an image domain verifies through the inverse") {
    auto disc = Domain::unit_disc();
    auto f = std::make_shared<HolomorphicMap>(quadratic_disc_map(0.3));
    auto img = Domain::image(disc, f);
    auto pts = sample_interior(*img, SampleStrategy::QuasiRandom, 10, 1);
    CHECK(pts.size() == 10);
    for (auto& p : pts) CHECK(contains(*img, p));
}

TEST_CASE("chord_arc_path: hole-free cases") {
    auto disc = Domain::unit_disc();
    PathPolyline straight = chord_arc_path(*disc, complex(-0.5), complex(0.5));
    CHECK(straight.pieces.size() == 1);
    CHECK(straight.length() == doctest::Approx(1.0).epsilon(1e-14));

    PathPolyline empty = chord_arc_path(*disc, complex(0.3), complex(0.3));
    CHECK(empty.pieces.empty());
    CHECK(empty.length() == 0.0);
}

TEST_CASE("chord_arc_path: segment-arc-segment around one hole") {
    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.0, 0.3}});
    complex z(-0.8), w(0.8);
    PathPolyline path = chord_arc_path(*cd, z, w);
    CHECK(path.pieces.size() == 3);
    CHECK(path.pieces[0].kind == PathPiece::Kind::Segment);
    CHECK(path.pieces[1].kind == PathPiece::Kind::Arc);
    CHECK(path.pieces[2].kind == PathPiece::Kind::Segment);
    CHECK(path.length() <= (kPi / 2.0) * std::abs(z - w) * (1.0 + 1e-12));
    for (auto& p : path.discretize(512)) CHECK(contains(*cd, {p}));
    // endpoints
    auto pts = path.discretize(512);
    CHECK(std::abs(pts.front() - z) < 1e-12);
    CHECK(std::abs(pts.back() - w) < 1e-12);
}

TEST_CASE("chord_arc_path: tangent segment is deformed") {
    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.0, 0.3}});
    // the segment from (-0.8 + 0.3i) to (0.8 + 0.3i) grazes the hole boundary
    complex z(-0.8, 0.3), w(0.8, 0.3);
    PathPolyline path = chord_arc_path(*cd, z, w);
    bool has_arc = false;
    for (auto& p : path.pieces) has_arc = has_arc || p.kind == PathPiece::Kind::Arc;
    CHECK(has_arc);
    for (auto& p : path.discretize(512)) CHECK(contains(*cd, {p}));
    CHECK(path.length() <= (kPi / 2.0) * std::abs(z - w) * (1.0 + 1e-12));
}

TEST_CASE("chord_arc_path: two holes crossed by one segment") {
    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{-0.45, 0.15}, Disc{0.45, 0.15}});
    complex z(-0.9), w(0.9);
    PathPolyline path = chord_arc_path(*cd, z, w);
    int arcs = 0;
    for (auto& p : path.pieces) arcs += p.kind == PathPiece::Kind::Arc;
    CHECK(arcs == 2);
    for (auto& p : path.discretize(512)) CHECK(contains(*cd, {p}));
    CHECK(path.length() <= (kPi / 2.0) * std::abs(z - w) * (1.0 + 1e-12));
}

TEST_CASE("property: random chord-arc paths stay inside and obey the pi/2 bound") {
    auto one = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{complex(0.1, 0.05), 0.25}});
    auto two = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{complex(-0.4, 0.1), 0.18},
                                                      Disc{complex(0.45, -0.2), 0.2}});
    for (auto& domain : {one, two}) {
        auto pts = sample_interior(*domain, SampleStrategy::QuasiRandom, 400, 11);
        for (int k = 0; k < 200; ++k) {
            complex z = pts[2 * k][0], w = pts[2 * k + 1][0];
            if (std::abs(z - w) < 1e-9) continue;
            PathPolyline path = chord_arc_path(*domain, z, w);
            CHECK(path.length() <= (kPi / 2.0) * std::abs(z - w) * (1.0 + 1e-12));
            for (auto& p : path.discretize(128)) CHECK(contains(*domain, {p}));
        }
    }
}

TEST_CASE("chord_arc_ratio_estimate") {
    auto disc = Domain::unit_disc();
    CHECK(chord_arc_ratio_estimate(*disc, 50, 1).ratio == doctest::Approx(1.0).epsilon(1e-12));

    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.0, 0.3}});
    ChordArcEstimate est = chord_arc_ratio_estimate(*cd, 500, 2);
    CHECK(est.ratio <= kPi / 2.0 + 1e-9);
    CHECK(est.ratio > 1.0); // some sampled pair needs a detour

    auto f = std::make_shared<HolomorphicMap>(quadratic_disc_map(0.3));
    auto img = Domain::image(Domain::unit_disc(), f);
    ChordArcEstimate im_est = chord_arc_ratio_estimate(*img, 200, 3);
    CHECK(im_est.ratio >= 1.0);
    CHECK(im_est.ratio < 4.0); // finite and sane for this gentle map
}

TEST_CASE("domain JSON round trip") {
    auto cd = Domain::circle_domain(Disc{complex(0.1, 0.0), 1.2}, {Disc{complex(-0.3, 0.2), 0.2}});
    auto back = Domain::from_json(cd->to_json());
    CHECK(back->to_json() == cd->to_json());

    auto f = std::make_shared<HolomorphicMap>(quadratic_disc_map(0.3));
    auto img = Domain::image(Domain::unit_disc(), f);
    auto img_back = Domain::from_json(img->to_json());
    CHECK(img_back->to_json() == img->to_json());
    // the parsed map evaluates identically
    auto* spec = img_back->as<ImageSpec>();
    REQUIRE(spec != nullptr);
    CHECK(std::abs(spec->map->evaluate({complex(0.4, 0.1)})[0] -
                   f->evaluate({complex(0.4, 0.1)})[0]) < 1e-14);
}

TEST_CASE("boundary curves") {
    auto cd = Domain::circle_domain(Disc{0.0, 1.0}, {Disc{0.0, 0.3}});
    auto curves = boundary_curves(*cd, 128);
    CHECK(curves.size() == 2);
    CHECK(curves[0].size() == 128);
    for (auto& p : curves[0]) CHECK(std::abs(std::abs(p) - 1.0) < 1e-12);
    for (auto& p : curves[1]) CHECK(std::abs(std::abs(p) - 0.3) < 1e-12);
}
