#include "qd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qd/errors.hpp"
#include "qd/gauss.hpp"
#include "qd/maps.hpp"
#include "qd/sampling.hpp"

namespace qd {

// ---------------------------------------------------------------------------
// construction and invariants

Domain::Domain(Spec spec) : spec_(std::move(spec)) {
    dimension_ = std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) return 1;
            if constexpr (std::is_same_v<T, PolydiscSpec>) return static_cast<int>(s.axes.size());
            if constexpr (std::is_same_v<T, BallSpec>) return s.n;
            if constexpr (std::is_same_v<T, ProductSpec>) return static_cast<int>(s.factors.size());
            if constexpr (std::is_same_v<T, CircleDomainSpec>) return 1;
            if constexpr (std::is_same_v<T, ImageSpec>) return s.base->dimension();
        },
        spec_);
}

DomainPtr Domain::disc(complex center, double radius) {
    if (radius <= 0.0) fail(ErrorCode::SpecParseError, "disc radius must be positive");
    return DomainPtr(new Domain(Disc{center, radius}));
}

DomainPtr Domain::polydisc(std::vector<Disc> axes) {
    if (axes.empty()) fail(ErrorCode::SpecParseError, "polydisc needs at least one axis");
    for (auto& d : axes)
        if (d.radius <= 0.0) fail(ErrorCode::SpecParseError, "disc radius must be positive");
    return DomainPtr(new Domain(PolydiscSpec{std::move(axes)}));
}

DomainPtr Domain::unit_polydisc(int n) {
    return polydisc(std::vector<Disc>(static_cast<std::size_t>(n), Disc{0.0, 1.0}));
}

DomainPtr Domain::ball(int n, Point center, double radius) {
    if (radius <= 0.0) fail(ErrorCode::SpecParseError, "ball radius must be positive");
    if (static_cast<int>(center.size()) != n) fail(ErrorCode::DimensionMismatch, "ball center dimension");
    return DomainPtr(new Domain(BallSpec{n, std::move(center), radius}));
}

DomainPtr Domain::unit_ball(int n) { return ball(n, Point(static_cast<std::size_t>(n), 0.0), 1.0); }

DomainPtr Domain::product(std::vector<DomainPtr> factors) {
    if (factors.empty()) fail(ErrorCode::SpecParseError, "product needs at least one factor");
    for (auto& f : factors)
        if (!f->is_planar()) fail(ErrorCode::DimensionMismatch, "product factors must be planar");
    return DomainPtr(new Domain(ProductSpec{std::move(factors)}));
}

DomainPtr Domain::circle_domain(Disc outer, std::vector<Disc> holes) {
    if (outer.radius <= 0.0) fail(ErrorCode::SpecParseError, "outer radius must be positive");
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const Disc& h = holes[i];
        if (h.radius <= 0.0) fail(ErrorCode::SpecParseError, "hole radius must be positive");
        if (std::abs(h.center - outer.center) + h.radius >= outer.radius)
            fail(ErrorCode::SpecParseError, "hole not contained in the outer disc");
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(h.center - holes[j].center) <= h.radius + holes[j].radius)
                fail(ErrorCode::SpecParseError, "holes must be mutually disjoint");
    }
    return DomainPtr(new Domain(CircleDomainSpec{outer, std::move(holes)}));
}

DomainPtr Domain::image(DomainPtr base, std::shared_ptr<const HolomorphicMap> map) {
    if (!base || !map) fail(ErrorCode::SpecParseError, "image domain needs base and map");
    if (map->dim_in() != base->dimension())
        fail(ErrorCode::DimensionMismatch, "map input dimension != base dimension");
    if (base->as<ImageSpec>()) fail(ErrorCode::UnsupportedDomain, "nested image domains");
    return DomainPtr(new Domain(ImageSpec{std::move(base), std::move(map)}));
}

std::optional<double> Domain::known_volume() const {
    if (auto* d = as<Disc>()) return kPi * d->radius * d->radius;
    if (auto* p = as<PolydiscSpec>()) {
        double v = 1.0;
        for (auto& ax : p->axes) v *= kPi * ax.radius * ax.radius;
        return v;
    }
    if (auto* b = as<BallSpec>()) {
        double v = std::pow(kPi, b->n) / std::tgamma(b->n + 1.0);
        return v * std::pow(b->radius, 2.0 * b->n);
    }
    if (auto* p = as<ProductSpec>()) {
        double v = 1.0;
        for (auto& f : p->factors) {
            auto fv = f->known_volume();
            if (!fv) return std::nullopt;
            v *= *fv;
        }
        return v;
    }
    if (auto* c = as<CircleDomainSpec>()) {
        double v = kPi * c->outer.radius * c->outer.radius;
        for (auto& h : c->holes) v -= kPi * h.radius * h.radius;
        return v;
    }
    return std::nullopt;
}

double Domain::inradius() const {
    if (auto* d = as<Disc>()) return d->radius;
    if (auto* p = as<PolydiscSpec>()) {
        double r = p->axes[0].radius;
        for (auto& ax : p->axes) r = std::min(r, ax.radius);
        return r;
    }
    if (auto* b = as<BallSpec>()) return b->radius;
    if (auto* p = as<ProductSpec>()) {
        double r = p->factors[0]->inradius();
        for (auto& f : p->factors) r = std::min(r, f->inradius());
        return r;
    }
    if (auto* c = as<CircleDomainSpec>()) {
        // largest disc about a point midway between the outer boundary and holes
        double r = c->outer.radius;
        for (auto& h : c->holes) r = std::min(r, std::abs(h.center - c->outer.center) - h.radius);
        return std::max(r * 0.5, 1e-3 * c->outer.radius);
    }
    if (auto* im = as<ImageSpec>()) return im->base->inradius();
    return 0.0;
}

Point Domain::reference_center() const {
    if (auto* d = as<Disc>()) return {d->center};
    if (auto* p = as<PolydiscSpec>()) {
        Point c;
        for (auto& ax : p->axes) c.push_back(ax.center);
        return c;
    }
    if (auto* b = as<BallSpec>()) return b->center;
    if (auto* p = as<ProductSpec>()) {
        Point c;
        for (auto& f : p->factors) c.push_back(f->reference_center()[0]);
        return c;
    }
    if (auto* c = as<CircleDomainSpec>()) return {c->outer.center};
    if (auto* im = as<ImageSpec>()) return im->map->evaluate(im->base->reference_center());
    return {};
}

// ---------------------------------------------------------------------------
// membership

ContainsResult contains_checked(const Domain& domain, const Point& z) {
    if (static_cast<int>(z.size()) != domain.dimension())
        fail(ErrorCode::DimensionMismatch, "contains: point dimension != domain dimension");
    ContainsResult res;
    if (auto* d = domain.as<Disc>()) {
        res.inside = std::abs(z[0] - d->center) < d->radius;
        return res;
    }
    if (auto* p = domain.as<PolydiscSpec>()) {
        res.inside = true;
        for (std::size_t i = 0; i < p->axes.size(); ++i)
            res.inside = res.inside && std::abs(z[i] - p->axes[i].center) < p->axes[i].radius;
        return res;
    }
    if (auto* b = domain.as<BallSpec>()) {
        double s = 0.0;
        for (int i = 0; i < b->n; ++i) s += std::norm(z[i] - b->center[i]);
        res.inside = s < b->radius * b->radius;
        return res;
    }
    if (auto* p = domain.as<ProductSpec>()) {
        res.inside = true;
        for (std::size_t i = 0; i < p->factors.size(); ++i)
            res.inside = res.inside && contains(*p->factors[i], {z[i]});
        return res;
    }
    if (auto* c = domain.as<CircleDomainSpec>()) {
        res.inside = std::abs(z[0] - c->outer.center) < c->outer.radius;
        for (auto& h : c->holes) res.inside = res.inside && std::abs(z[0] - h.center) > h.radius;
        return res;
    }
    if (auto* im = domain.as<ImageSpec>()) {
        auto pre = invert_into(*im->map, z, *im->base);
        if (!pre) {
            res.inside = false;
            res.inverse_warning = true;
            return res;
        }
        res.inside = contains(*im->base, *pre);
        return res;
    }
    fail(ErrorCode::UnsupportedDomain, "contains: unhandled domain kind");
}

bool contains(const Domain& domain, const Point& z) { return contains_checked(domain, z).inside; }

// ---------------------------------------------------------------------------
// interior sampling

namespace {

// per-complex-coordinate bounding box: center and half-width
struct Box {
    std::vector<complex> center;
    std::vector<double> half;
};

Box bounding_box(const Domain& domain) {
    Box box;
    if (auto* d = domain.as<Disc>()) {
        box.center = {d->center};
        box.half = {d->radius};
    } else if (auto* p = domain.as<PolydiscSpec>()) {
        for (auto& ax : p->axes) {
            box.center.push_back(ax.center);
            box.half.push_back(ax.radius);
        }
    } else if (auto* b = domain.as<BallSpec>()) {
        for (int i = 0; i < b->n; ++i) {
            box.center.push_back(b->center[i]);
            box.half.push_back(b->radius);
        }
    } else if (auto* p = domain.as<ProductSpec>()) {
        for (auto& f : p->factors) {
            Box fb = bounding_box(*f);
            box.center.push_back(fb.center[0]);
            box.half.push_back(fb.half[0]);
        }
    } else if (auto* c = domain.as<CircleDomainSpec>()) {
        box.center = {c->outer.center};
        box.half = {c->outer.radius};
    } else {
        fail(ErrorCode::UnsupportedDomain, "bounding_box: unhandled domain kind");
    }
    return box;
}

} // namespace

std::vector<Point> sample_interior(const Domain& domain, SampleStrategy strategy, int count,
                                   std::uint64_t seed) {
    if (count < 1) fail(ErrorCode::SpecParseError, "sample_interior: count must be >= 1");

    if (auto* im = domain.as<ImageSpec>()) {
        // map forward; the map is declared injective so interior goes to interior
        auto base_pts = sample_interior(*im->base, strategy, count, seed);
        std::vector<Point> out;
        out.reserve(base_pts.size());
        for (auto& p : base_pts) out.push_back(im->map->evaluate(p));
        return out;
    }

    Box box = bounding_box(domain);
    const int n = domain.dimension();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));

    if (strategy == SampleStrategy::QuasiRandom) {
        Halton seq(2 * n, seed);
        const long budget = 10000L + 2000L * static_cast<long>(count);
        for (long it = 0; it < budget && static_cast<int>(out.size()) < count; ++it) {
            auto u = seq.next();
            Point z(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                z[i] = box.center[i] +
                       complex((2.0 * u[2 * i] - 1.0) * box.half[i], (2.0 * u[2 * i + 1] - 1.0) * box.half[i]);
            if (contains(domain, z)) out.push_back(std::move(z));
        }
        if (static_cast<int>(out.size()) < count)
            fail(ErrorCode::EmptyDomain, "rejection sampling exhausted its budget");
        return out;
    }

    // tensor grid: refine per-axis resolution until enough interior points
    for (int m = 2; m < 4096; m = m * 3 / 2 + 1) {
        out.clear();
        std::vector<int> idx(static_cast<std::size_t>(2 * n), 0);
        const long total = static_cast<long>(std::pow(static_cast<double>(m), 2 * n));
        if (total > 50'000'000L) break;
        for (long flat = 0; flat < total && static_cast<int>(out.size()) < count; ++flat) {
            long rem = flat;
            for (int i = 0; i < 2 * n; ++i) {
                idx[i] = static_cast<int>(rem % m);
                rem /= m;
            }
            Point z(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                double xr = (idx[2 * i] + 0.5) / m * 2.0 - 1.0;
                double xi = (idx[2 * i + 1] + 0.5) / m * 2.0 - 1.0;
                z[i] = box.center[i] + complex(xr * box.half[i], xi * box.half[i]);
            }
            if (contains(domain, z)) out.push_back(std::move(z));
        }
        if (static_cast<int>(out.size()) >= count) return out;
    }
    fail(ErrorCode::EmptyDomain, "tensor grid produced too few interior points");
}

// ---------------------------------------------------------------------------
// path pieces

PathPiece PathPiece::segment(complex a, complex b) {
    PathPiece p;
    p.kind = Kind::Segment;
    p.from = a;
    p.to = b;
    return p;
}

PathPiece PathPiece::arc(complex center, double radius, double a0, double a1) {
    PathPiece p;
    p.kind = Kind::Arc;
    p.center = center;
    p.radius = radius;
    p.angle_from = a0;
    p.angle_to = a1;
    p.from = center + radius * std::exp(complex(0, a0));
    p.to = center + radius * std::exp(complex(0, a1));
    return p;
}

double PathPiece::length() const {
    if (kind == Kind::Segment) return std::abs(to - from);
    return radius * std::abs(angle_to - angle_from);
}

complex PathPiece::at(double t) const {
    if (kind == Kind::Segment) return from + t * (to - from);
    double a = angle_from + t * (angle_to - angle_from);
    return center + radius * std::exp(complex(0, a));
}

double PathPolyline::length() const {
    double s = 0.0;
    for (auto& p : pieces) s += p.length();
    return s;
}

std::vector<complex> PathPolyline::discretize(int n) const {
    std::vector<complex> pts;
    if (pieces.empty() || n < 1) return pts;
    const double total = length();
    pts.reserve(static_cast<std::size_t>(n));
    if (total <= 0.0) {
        pts.assign(static_cast<std::size_t>(n), pieces.front().from);
        return pts;
    }
    std::size_t piece = 0;
    double consumed = 0.0;
    for (int k = 0; k < n; ++k) {
        double s = total * k / (n - 1.0);
        while (piece + 1 < pieces.size() && consumed + pieces[piece].length() < s)
            consumed += pieces[piece++].length();
        double plen = pieces[piece].length();
        double t = plen > 0.0 ? (s - consumed) / plen : 0.0;
        pts.push_back(pieces[piece].at(std::clamp(t, 0.0, 1.0)));
    }
    return pts;
}

// ---------------------------------------------------------------------------
// chord-arc path for circle domains

namespace {

struct HoleCrossing {
    double t_in, t_out;
    complex center;
    double radius_enlarged;
};

double min_boundary_gap(const CircleDomainSpec& c) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.holes.size(); ++i) {
        gap = std::min(gap, c.outer.radius - std::abs(c.holes[i].center - c.outer.center) -
                                c.holes[i].radius);
        for (std::size_t j = 0; j < i; ++j)
            gap = std::min(gap, std::abs(c.holes[i].center - c.holes[j].center) - c.holes[i].radius -
                                    c.holes[j].radius);
    }
    return gap;
}

} // namespace

PathPolyline chord_arc_path(const Domain& domain, complex z, complex w) {
    if (!domain.is_planar()) fail(ErrorCode::DimensionMismatch, "chord_arc_path: planar domains only");
    if (!contains(domain, {z}) || !contains(domain, {w}))
        fail(ErrorCode::OutsideDomain, "chord_arc_path: endpoints must be interior");

    PathPolyline path;
    if (z == w) return path;

    const auto* cd = domain.as<CircleDomainSpec>();
    if (!cd || cd->holes.empty()) {
        path.pieces.push_back(PathPiece::segment(z, w));
        return path;
    }

    const double gap = min_boundary_gap(*cd);
    if (!(gap > 0.0)) fail(ErrorCode::DegenerateGap, "boundary circles touch");
    const double eps_global = 0.5 * gap;

    const complex d = w - z;
    const double len = std::abs(d);
    std::vector<HoleCrossing> crossings;
    for (auto& h : cd->holes) {
        // distance from the closed segment to the hole center
        double t_star = std::clamp(((std::conj(d) * (h.center - z)).real()) / (len * len), 0.0, 1.0);
        double dist_seg = std::abs(z + t_star * d - h.center);
        if (dist_seg > h.radius) continue; // segment misses the closed hole (tangency counts as a hit)

        double eps = std::min({eps_global, 0.5 * (std::abs(z - h.center) - h.radius),
                               0.5 * (std::abs(w - h.center) - h.radius)});
        if (!(eps > 0.0)) fail(ErrorCode::DegenerateGap, "endpoint too close to a hole boundary");
        const double R = h.radius + eps;
        // |z + t d - center|^2 = R^2
        const complex zc = z - h.center;
        const double a = len * len;
        const double b = 2.0 * (std::conj(d) * zc).real();
        const double c0 = std::norm(zc) - R * R;
        const double disc = b * b - 4.0 * a * c0;
        if (disc <= 0.0) continue; // enlarged circle not met; hole grazes beyond eps reach
        const double sq = std::sqrt(disc);
        double t_in = (-b - sq) / (2.0 * a);
        double t_out = (-b + sq) / (2.0 * a);
        if (t_out <= 0.0 || t_in >= 1.0) continue; // crossing lies beyond the segment
        crossings.push_back({t_in, t_out, h.center, R});
    }

    std::sort(crossings.begin(), crossings.end(),
              [](const HoleCrossing& a, const HoleCrossing& b) { return a.t_in < b.t_in; });
    for (std::size_t i = 1; i < crossings.size(); ++i)
        if (crossings[i].t_in < crossings[i - 1].t_out - 1e-15)
            fail(ErrorCode::DegenerateGap, "enlarged circles overlap along the segment");

    double cursor = 0.0;
    for (auto& cr : crossings) {
        complex enter = z + cr.t_in * d;
        complex exit = z + cr.t_out * d;
        if (cr.t_in > cursor + 1e-15) path.pieces.push_back(PathPiece::segment(z + cursor * d, enter));
        double a0 = std::arg(enter - cr.center);
        double a1 = std::arg(exit - cr.center);
        double delta = a1 - a0;
        while (delta > kPi) delta -= 2.0 * kPi;
        while (delta < -kPi) delta += 2.0 * kPi;
        path.pieces.push_back(PathPiece::arc(cr.center, cr.radius_enlarged, a0, a0 + delta));
        cursor = cr.t_out;
    }
    if (cursor < 1.0 - 1e-15) path.pieces.push_back(PathPiece::segment(z + cursor * d, w));
    return path;
}

// ---------------------------------------------------------------------------
// chord-arc ratio estimate

ChordArcEstimate chord_arc_ratio_estimate(const Domain& domain, int trials, std::uint64_t seed) {
    if (!domain.is_planar()) fail(ErrorCode::DimensionMismatch, "chord_arc_ratio_estimate: planar only");
    if (trials < 1) fail(ErrorCode::SpecParseError, "trials must be >= 1");

    ChordArcEstimate est;
    est.trials = trials;
    est.ratio = 0.0;

    const auto* im = domain.as<ImageSpec>();
    std::vector<Point> base_pts;
    if (im) {
        base_pts = sample_interior(*im->base, SampleStrategy::QuasiRandom, 2 * trials, seed);
    } else {
        base_pts = sample_interior(domain, SampleStrategy::QuasiRandom, 2 * trials, seed);
    }

    auto rule = gauss_legendre(64);
    for (int k = 0; k < trials; ++k) {
        complex a = base_pts[2 * k][0], b = base_pts[2 * k + 1][0];
        if (std::abs(a - b) < 1e-12) continue;
        double ratio;
        complex pz, pw;
        if (im) {
            // image of the straight base segment, a valid in-domain path
            const Expr& f = im->map->component(0);
            Expr fp = f.derivative(0);
            double arclen = 0.0;
            for (int q = 0; q < 64; ++q) {
                complex zt = a + 0.5 * (rule->x[q] + 1.0) * (b - a);
                arclen += 0.5 * rule->w[q] * std::abs(fp.eval({zt})) * std::abs(b - a);
            }
            pz = f.eval({a});
            pw = f.eval({b});
            if (std::abs(pz - pw) < 1e-12) continue;
            ratio = arclen / std::abs(pz - pw);
        } else {
            PathPolyline path = chord_arc_path(domain, a, b);
            pz = a;
            pw = b;
            ratio = path.length() / std::abs(a - b);
        }
        if (ratio > est.ratio) {
            est.ratio = ratio;
            est.worst_z = pz;
            est.worst_w = pw;
        }
    }
    return est;
}

// ---------------------------------------------------------------------------
// boundary curves

std::vector<std::vector<complex>> boundary_curves(const Domain& domain, int points_per_curve) {
    auto circle = [&](const Disc& d) {
        std::vector<complex> pts;
        pts.reserve(static_cast<std::size_t>(points_per_curve));
        for (int k = 0; k < points_per_curve; ++k) {
            double th = 2.0 * kPi * k / points_per_curve;
            pts.push_back(d.center + d.radius * std::exp(complex(0, th)));
        }
        return pts;
    };
    if (auto* d = domain.as<Disc>()) return {circle(*d)};
    if (auto* c = domain.as<CircleDomainSpec>()) {
        std::vector<std::vector<complex>> curves{circle(c->outer)};
        for (auto& h : c->holes) curves.push_back(circle(h));
        return curves;
    }
    if (auto* im = domain.as<ImageSpec>()) {
        auto base_curves = boundary_curves(*im->base, points_per_curve);
        for (auto& curve : base_curves)
            for (auto& p : curve) p = im->map->evaluate({p})[0];
        return base_curves;
    }
    fail(ErrorCode::UnsupportedDomain, "boundary_curves: planar domains only");
}

// ---------------------------------------------------------------------------
// JSON

static nlohmann::json complex_json(complex z) { return nlohmann::json::array({z.real(), z.imag()}); }
static complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return complex(j.get<double>(), 0.0);
    return complex(j.at(0).get<double>(), j.at(1).get<double>());
}
static nlohmann::json disc_json(const Disc& d) {
    return {{"center", complex_json(d.center)}, {"radius", d.radius}};
}
static Disc disc_from_json(const nlohmann::json& j) {
    return Disc{complex_from_json(j.at("center")), j.at("radius").get<double>()};
}

nlohmann::json Domain::to_json() const {
    nlohmann::json j;
    if (auto* d = as<Disc>()) {
        j["kind"] = "disc";
        j.update(disc_json(*d));
    } else if (auto* p = as<PolydiscSpec>()) {
        j["kind"] = "polydisc";
        for (auto& ax : p->axes) j["axes"].push_back(disc_json(ax));
    } else if (auto* b = as<BallSpec>()) {
        j["kind"] = "ball";
        j["n"] = b->n;
        for (auto& c : b->center) j["center"].push_back(complex_json(c));
        j["radius"] = b->radius;
    } else if (auto* p = as<ProductSpec>()) {
        j["kind"] = "product";
        for (auto& f : p->factors) j["factors"].push_back(f->to_json());
    } else if (auto* c = as<CircleDomainSpec>()) {
        j["kind"] = "circle-domain";
        j["outer"] = disc_json(c->outer);
        j["holes"] = nlohmann::json::array();
        for (auto& h : c->holes) j["holes"].push_back(disc_json(h));
    } else if (auto* im = as<ImageSpec>()) {
        j["kind"] = "image";
        j["base"] = im->base->to_json();
        for (auto& comp : im->map->components()) j["map"].push_back(comp.to_json());
    }
    return j;
}

DomainPtr Domain::from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "disc") return disc(complex_from_json(j.at("center")), j.at("radius").get<double>());
    if (kind == "polydisc") {
        std::vector<Disc> axes;
        for (auto& a : j.at("axes")) axes.push_back(disc_from_json(a));
        return polydisc(std::move(axes));
    }
    if (kind == "ball") {
        Point center;
        for (auto& c : j.at("center")) center.push_back(complex_from_json(c));
        return ball(j.at("n").get<int>(), std::move(center), j.at("radius").get<double>());
    }
    if (kind == "product") {
        std::vector<DomainPtr> factors;
        for (auto& f : j.at("factors")) factors.push_back(from_json(f));
        return product(std::move(factors));
    }
    if (kind == "circle-domain") {
        std::vector<Disc> holes;
        for (auto& h : j.at("holes")) holes.push_back(disc_from_json(h));
        return circle_domain(disc_from_json(j.at("outer")), std::move(holes));
    }
    if (kind == "image") {
        DomainPtr base = from_json(j.at("base"));
        auto map = std::make_shared<HolomorphicMap>(parse_map(j.at("map"), base->dimension()));
        return image(std::move(base), std::move(map));
    }
    fail(ErrorCode::SpecParseError, "unknown domain kind: " + kind);
}

std::string Domain::describe() const { return to_json().dump(); }

} // namespace qd
