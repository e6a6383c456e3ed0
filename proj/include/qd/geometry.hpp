///////////////////////////////////////////////////////////////////////////////
// geometry.hpp
//
// domains of C^n: discs, polydiscs, balls, products, circle domains with
// circular holes, and biholomorphic images. Membership, interior sampling,
// boundary discretization, and the enlarged-circle chord-arc path
// construction for circle domains.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qd/core.hpp"
#include "qd/expr.hpp"

#include "json.hpp"

namespace qd {

class HolomorphicMap; // maps.hpp

struct Disc {
    complex center{0.0, 0.0};
    double radius = 1.0;
};

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

struct PolydiscSpec {
    std::vector<Disc> axes;
};

struct BallSpec {
    int n = 2;
    Point center;
    double radius = 1.0;
};

struct ProductSpec {
    std::vector<DomainPtr> factors; // each planar
};

struct CircleDomainSpec {
    Disc outer;
    std::vector<Disc> holes; // closed discs removed from the outer disc
};

struct ImageSpec {
    DomainPtr base;
    std::shared_ptr<const HolomorphicMap> map; // declared injective on base
};

class Domain {
  public:
    using Spec = std::variant<Disc, PolydiscSpec, BallSpec, ProductSpec, CircleDomainSpec, ImageSpec>;

    static DomainPtr disc(complex center, double radius);
    static DomainPtr unit_disc() { return disc(0.0, 1.0); }
    static DomainPtr polydisc(std::vector<Disc> axes);
    static DomainPtr unit_polydisc(int n);
    static DomainPtr ball(int n, Point center, double radius);
    static DomainPtr unit_ball(int n);
    static DomainPtr product(std::vector<DomainPtr> factors);
    static DomainPtr circle_domain(Disc outer, std::vector<Disc> holes);
    static DomainPtr image(DomainPtr base, std::shared_ptr<const HolomorphicMap> map);

    const Spec& spec() const { return spec_; }
    int dimension() const { return dimension_; }
    bool is_planar() const { return dimension_ == 1; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&spec_);
    }

    /// closed-form volume (Lebesgue measure of the underlying R^{2n} set),
    /// when known; Image domains have none
    std::optional<double> known_volume() const;

    /// radius of the largest disc/ball about the reference center guaranteed
    /// inside the domain (used to place default node lattices)
    double inradius() const;
    /// reference interior point (center of the canonical shapes)
    Point reference_center() const;

    nlohmann::json to_json() const;
    static DomainPtr from_json(const nlohmann::json& j);

    std::string describe() const;

  private:
    explicit Domain(Spec spec);
    Spec spec_;
    int dimension_;
};

struct ContainsResult {
    bool inside = false;
    bool inverse_warning = false; // Image domains: Newton inversion did not converge
};

bool contains(const Domain& domain, const Point& z);
ContainsResult contains_checked(const Domain& domain, const Point& z);

/// deterministic interior samples; strategy "tensor-grid" or "quasi-random"
enum class SampleStrategy { TensorGrid, QuasiRandom };
std::vector<Point> sample_interior(const Domain& domain, SampleStrategy strategy, int count,
                                   std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// chord-arc machinery (planar)

struct PathPiece {
    enum class Kind { Segment, Arc } kind;
    // segment: from -> to
    complex from, to;
    // arc: center, radius, angles (radians), traversed from angle_from to
    // angle_to (shorter arc; |angle_to - angle_from| <= pi after reduction)
    complex center;
    double radius = 0.0;
    double angle_from = 0.0, angle_to = 0.0;

    static PathPiece segment(complex a, complex b);
    static PathPiece arc(complex center, double radius, double a0, double a1);
    double length() const;
    complex at(double t) const; // t in [0,1] along the piece
};

struct PathPolyline {
    std::vector<PathPiece> pieces;
    double length() const;
    /// n points along the path, arclength-uniform across pieces
    std::vector<complex> discretize(int n) const;
};

/// the straight segment deformed around intersected holes by shorter arcs of
/// enlarged circles; total length <= (pi/2) |z - w|
PathPolyline chord_arc_path(const Domain& domain, complex z, complex w);

struct ChordArcEstimate {
    double ratio = 1.0; // max over sampled pairs of path length / |z - w|
    complex worst_z, worst_w;
    int trials = 0;
};

ChordArcEstimate chord_arc_ratio_estimate(const Domain& domain, int trials, std::uint64_t seed);

/// closed boundary curves discretized for plotting (planar and image-of-disc)
std::vector<std::vector<complex>> boundary_curves(const Domain& domain, int points_per_curve = 720);

} // namespace qd
