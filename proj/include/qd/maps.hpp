///////////////////////////////////////////////////////////////////////////////
// maps.hpp
//
// closed-form holomorphic maps: evaluation, complex Jacobian determinants via
// order-1 jets, Newton inversion (closed-form inverses used when registered),
// sampled injectivity scanning, and divided-difference minima.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "qd/expr.hpp"
#include "qd/geometry.hpp"

namespace qd {

class HolomorphicMap {
  public:
    HolomorphicMap(std::vector<Expr> components, DomainPtr declared_domain = nullptr);

    static HolomorphicMap identity(int n);
    /// diagonal map (f_1(z_1), ..., f_n(z_n)) from planar expressions
    static HolomorphicMap diagonal(const std::vector<Expr>& planar_components);

    int dim_in() const { return dim_in_; }
    int dim_out() const { return static_cast<int>(components_.size()); }
    const std::vector<Expr>& components() const { return components_; }
    const Expr& component(int i) const { return components_[i]; }
    DomainPtr declared_domain() const { return declared_domain_; }

    void register_inverse(std::shared_ptr<const HolomorphicMap> inverse) { inverse_ = std::move(inverse); }
    std::shared_ptr<const HolomorphicMap> registered_inverse() const { return inverse_; }

    Point evaluate(const Point& z) const;
    /// jets of all components at a common center
    std::vector<Jet> lift(const Point& center, int order) const;

    /// complex Jacobian determinant as an expression (n <= 3)
    Expr jacobian_expr() const;

  private:
    std::vector<Expr> components_;
    int dim_in_;
    DomainPtr declared_domain_;
    std::shared_ptr<const HolomorphicMap> inverse_;
};

using MapPtr = std::shared_ptr<const HolomorphicMap>;

complex jacobian_determinant(const HolomorphicMap& f, const Point& z);

/// point z with ||f(z) - target|| < tol; uses the registered closed-form
/// inverse when available, otherwise damped Newton from the seed
Point invert_at(const HolomorphicMap& f, const Point& target, const Point& seed, double tol = 1e-12,
                int max_iter = 50);

/// Newton inversion trying a lattice of seeds inside the base domain
std::optional<Point> invert_into(const HolomorphicMap& f, const Point& target, const Domain& base,
                                 double tol = 1e-12);

struct InjectivityReport {
    bool injective_on_sample = true;
    double min_pair_separation_ratio = 0.0;
    std::optional<std::pair<Point, Point>> witness;
    int sample_size = 0;
    int grid_resolution = 0;
};

/// pairwise sampled injectivity check over a deterministic interior grid of
/// roughly grid_resolution points, with Gauss-Newton refinement of the most
/// suspicious pairs toward exact image coincidences
InjectivityReport injectivity_scan(const HolomorphicMap& f, const Domain& domain, int grid_resolution);

struct DividedDifferenceResult {
    double min_abs = 0.0; // min over sampled pairs of |(f(z)-f(w))/(z-w)|, |f'| on the diagonal
    complex argmin_z, argmin_w;
};

/// planar divided-difference minimum over interior + boundary samples; when
/// refine is set, a local pattern search sharpens the observed minimum
DividedDifferenceResult divided_difference_min(const HolomorphicMap& f, const Domain& domain,
                                               int samples = 400, bool refine = true);

// the paper's named example maps
HolomorphicMap exp_counterexample_map();           // (e^{z1+z2} + z1, z1 + z2), inverse registered
HolomorphicMap bergman_coordinate_map();           // (1/(3 - z1 - z2), z1)
HolomorphicMap one_point_qdp_map();                // (z1^2 - z2, z1 + z2)
HolomorphicMap quadratic_disc_map(complex c);      // z + c z^2 on the unit disc

/// parse a map from scenario JSON: list of component expressions
HolomorphicMap parse_map(const nlohmann::json& spec, int nvars);

} // namespace qd
