#include "qd/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qd/errors.hpp"
#include "qd/sampling.hpp"

namespace qd {

HolomorphicMap::HolomorphicMap(std::vector<Expr> components, DomainPtr declared_domain)
    : components_(std::move(components)), declared_domain_(std::move(declared_domain)) {
    if (components_.empty()) fail(ErrorCode::SpecParseError, "map needs at least one component");
    dim_in_ = components_[0].nvars();
    for (auto& c : components_)
        if (c.nvars() != dim_in_) fail(ErrorCode::DimensionMismatch, "component variable counts differ");
}

HolomorphicMap HolomorphicMap::identity(int n) {
    std::vector<Expr> comps;
    for (int i = 0; i < n; ++i) comps.push_back(Expr::var(i, n));
    return HolomorphicMap(std::move(comps));
}

HolomorphicMap HolomorphicMap::diagonal(const std::vector<Expr>& planar_components) {
    const int n = static_cast<int>(planar_components.size());
    std::vector<Expr> comps;
    for (int i = 0; i < n; ++i) {
        if (planar_components[i].nvars() != 1)
            fail(ErrorCode::DimensionMismatch, "diagonal: components must be planar");
        comps.push_back(Expr::compose(planar_components[i], {Expr::var(i, n)}));
    }
    return HolomorphicMap(std::move(comps));
}

Point HolomorphicMap::evaluate(const Point& z) const {
    if (static_cast<int>(z.size()) != dim_in_)
        fail(ErrorCode::DimensionMismatch, "evaluate: point dimension != map input dimension");
    Point out(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) out[i] = components_[i].eval(z);
    return out;
}

std::vector<Jet> HolomorphicMap::lift(const Point& center, int order) const {
    std::vector<Jet> jets;
    jets.reserve(components_.size());
    for (auto& c : components_) jets.push_back(c.lift(center, order));
    return jets;
}

Expr HolomorphicMap::jacobian_expr() const {
    const int n = dim_in_;
    if (dim_out() != n) fail(ErrorCode::DimensionMismatch, "jacobian: map must be square");
    auto d = [&](int i, int j) { return components_[i].derivative(j); };
    if (n == 1) return d(0, 0);
    if (n == 2) return d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0);
    if (n == 3)
        return d(0, 0) * (d(1, 1) * d(2, 2) - d(1, 2) * d(2, 1)) -
               d(0, 1) * (d(1, 0) * d(2, 2) - d(1, 2) * d(2, 0)) +
               d(0, 2) * (d(1, 0) * d(2, 1) - d(1, 1) * d(2, 0));
    fail(ErrorCode::UnsupportedDomain, "jacobian_expr: n <= 3 only");
}

namespace {

// first-order partials via order-1 jets
std::vector<std::vector<complex>> jacobian_matrix(const HolomorphicMap& f, const Point& z) {
    const int n = f.dim_in();
    auto jets = f.lift(z, 1);
    std::vector<std::vector<complex>> J(f.dim_out(), std::vector<complex>(n));
    for (int i = 0; i < f.dim_out(); ++i)
        for (int j = 0; j < n; ++j) J[i][j] = jets[i].coefficient(MultiIndex::unit(n, j));
    return J;
}

complex det_small(const std::vector<std::vector<complex>>& J) {
    const int n = static_cast<int>(J.size());
    if (n == 1) return J[0][0];
    if (n == 2) return J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (n == 3)
        return J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
               J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    fail(ErrorCode::UnsupportedDomain, "determinant: n <= 3 only");
}

// solve J s = r for small n (partial-pivot elimination)
std::vector<complex> solve_small(std::vector<std::vector<complex>> J, std::vector<complex> r) {
    const int n = static_cast<int>(J.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(J[row][col]) > std::abs(J[piv][col])) piv = row;
        if (std::abs(J[piv][col]) < 1e-14) fail(ErrorCode::SingularJacobian, "Newton step: singular Jacobian");
        std::swap(J[piv], J[col]);
        std::swap(r[piv], r[col]);
        for (int row = col + 1; row < n; ++row) {
            complex m = J[row][col] / J[col][col];
            for (int k = col; k < n; ++k) J[row][k] -= m * J[col][k];
            r[row] -= m * r[col];
        }
    }
    std::vector<complex> s(n);
    for (int row = n - 1; row >= 0; --row) {
        complex acc = r[row];
        for (int k = row + 1; k < n; ++k) acc -= J[row][k] * s[k];
        s[row] = acc / J[row][row];
    }
    return s;
}

} // namespace

complex jacobian_determinant(const HolomorphicMap& f, const Point& z) {
    return det_small(jacobian_matrix(f, z));
}

Point invert_at(const HolomorphicMap& f, const Point& target, const Point& seed, double tol,
                int max_iter) {
    if (auto inv = f.registered_inverse()) return inv->evaluate(target);

    Point z = seed;
    for (int it = 0; it < max_iter; ++it) {
        Point fz = f.evaluate(z);
        std::vector<complex> r(fz.size());
        double err = 0.0;
        for (std::size_t i = 0; i < fz.size(); ++i) {
            r[i] = fz[i] - target[i];
            err += std::norm(r[i]);
        }
        if (std::sqrt(err) < tol) return z;
        auto J = jacobian_matrix(f, z);
        complex detJ = det_small(J);
        double damp = std::abs(detJ) < 1e-8 ? 0.25 : 1.0;
        auto step = solve_small(J, r);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] -= damp * step[i];
    }
    fail(ErrorCode::NoConvergence, "Newton inversion did not converge");
}

std::optional<Point> invert_into(const HolomorphicMap& f, const Point& target, const Domain& base,
                                 double tol) {
    if (auto inv = f.registered_inverse()) {
        Point z = inv->evaluate(target);
        Point back = f.evaluate(z);
        if (dist(back, target) < 1e-8) return z;
        return std::nullopt;
    }
    // seed lattice inside the base domain (deterministic)
    std::vector<Point> seeds = sample_interior(base, SampleStrategy::TensorGrid,
                                               base.dimension() == 1 ? 9 : 16, 0);
    std::sort(seeds.begin(), seeds.end(), [&](const Point& a, const Point& b) {
        return dist(f.evaluate(a), target) < dist(f.evaluate(b), target);
    });
    for (auto& s : seeds) {
        try {
            Point z = invert_at(f, target, s, tol);
            return z;
        } catch (const Error&) {
            continue;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// injectivity scan

namespace {

// deterministic interior grid of roughly `target` points
std::vector<Point> scan_grid(const Domain& domain, int target) {
    std::vector<Point> pts = sample_interior(domain, SampleStrategy::TensorGrid, target, 0);
    if (static_cast<int>(pts.size()) > target) pts.resize(static_cast<std::size_t>(target));
    return pts;
}

// Gauss-Newton toward an exact image coincidence f(z) = f(w); the system is
// underdetermined, so take the minimal-norm step. Returns true when a genuine
// coincidence with separated preimages is found inside the domain.
bool refine_coincidence(const HolomorphicMap& f, const Domain& domain, Point z, Point w,
                        std::pair<Point, Point>& witness) {
    const int n = f.dim_in();
    for (int it = 0; it < 40; ++it) {
        Point fz = f.evaluate(z), fw = f.evaluate(w);
        std::vector<complex> r(static_cast<std::size_t>(n));
        double rnorm = 0.0, sep = 0.0;
        for (int i = 0; i < n; ++i) {
            r[static_cast<std::size_t>(i)] = fz[i] - fw[i];
            rnorm += std::norm(r[static_cast<std::size_t>(i)]);
            sep += std::norm(z[i] - w[i]);
        }
        rnorm = std::sqrt(rnorm);
        sep = std::sqrt(sep);
        if (sep < 1e-7) return false; // collapsing onto the diagonal
        if (rnorm < 1e-12) {
            witness = {z, w};
            return true;
        }
        // J = [Jf(z), -Jf(w)], minimal-norm step s = J^H (J J^H)^{-1} r
        auto Jz = jacobian_matrix(f, z), Jw = jacobian_matrix(f, w);
        std::vector<std::vector<complex>> JJH(n, std::vector<complex>(n, complex(0.0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                complex acc = 0.0;
                for (int k = 0; k < n; ++k)
                    acc += Jz[i][k] * std::conj(Jz[j][k]) + Jw[i][k] * std::conj(Jw[j][k]);
                JJH[i][j] = acc;
            }
        std::vector<complex> y;
        try {
            y = solve_small(JJH, r);
        } catch (const Error&) {
            return false;
        }
        for (int k = 0; k < n; ++k) {
            complex sz = 0.0, sw = 0.0;
            for (int i = 0; i < n; ++i) {
                sz += std::conj(Jz[i][k]) * y[static_cast<std::size_t>(i)];
                sw -= std::conj(Jw[i][k]) * y[static_cast<std::size_t>(i)];
            }
            z[k] -= sz;
            w[k] -= sw;
        }
        if (!contains(domain, z) || !contains(domain, w)) return false;
    }
    return false;
}

} // namespace

InjectivityReport injectivity_scan(const HolomorphicMap& f, const Domain& domain, int grid_resolution) {
    if (grid_resolution < 2) fail(ErrorCode::SpecParseError, "grid_resolution must be >= 2");
    InjectivityReport rep;
    rep.grid_resolution = grid_resolution;

    auto pts = scan_grid(domain, grid_resolution);
    rep.sample_size = static_cast<int>(pts.size());
    std::vector<Point> images;
    images.reserve(pts.size());
    for (auto& p : pts) images.push_back(f.evaluate(p));

    double min_ratio = std::numeric_limits<double>::infinity();
    const double coincide_tol = 1e-9;
    // keep the most suspicious pairs for refinement
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> suspicious;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double dz = dist(pts[i], pts[j]);
            if (dz < 1e-14) continue;
            double df = dist(images[i], images[j]);
            double ratio = df / dz;
            if (ratio < min_ratio) min_ratio = ratio;
            if (df < coincide_tol) {
                rep.injective_on_sample = false;
                if (!rep.witness) rep.witness = {pts[i], pts[j]};
            }
            suspicious.emplace_back(ratio, std::make_pair(i, j));
            std::push_heap(suspicious.begin(), suspicious.end());
            if (suspicious.size() > 6) {
                std::pop_heap(suspicious.begin(), suspicious.end());
                suspicious.pop_back();
            }
        }
    rep.min_pair_separation_ratio = pts.size() > 1 ? min_ratio : 0.0;

    if (rep.injective_on_sample) {
        std::sort(suspicious.begin(), suspicious.end());
        for (auto& [ratio, idx] : suspicious) {
            std::pair<Point, Point> witness;
            if (refine_coincidence(f, domain, pts[idx.first], pts[idx.second], witness)) {
                rep.injective_on_sample = false;
                rep.witness = witness;
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// divided differences

DividedDifferenceResult divided_difference_min(const HolomorphicMap& f, const Domain& domain,
                                               int samples, bool refine) {
    if (!domain.is_planar() || f.dim_in() != 1)
        fail(ErrorCode::DimensionMismatch, "divided_difference_min: planar maps only");

    const Expr& g = f.component(0);
    Expr gp = g.derivative(0);
    auto F = [&](complex z, complex w) {
        if (std::abs(z - w) < 1e-9) return gp.eval({0.5 * (z + w)});
        return (g.eval({z}) - g.eval({w})) / (z - w);
    };

    // interior quasirandom samples plus closure (boundary) samples
    std::vector<complex> zs;
    for (auto& p : sample_interior(domain, SampleStrategy::QuasiRandom, samples * 3 / 4, 1))
        zs.push_back(p[0]);
    for (auto& curve : boundary_curves(domain, std::max(8, samples / 4)))
        for (auto& b : curve) zs.push_back(b);

    DividedDifferenceResult res;
    res.min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i; j < zs.size(); ++j) {
            double v = std::abs(F(zs[i], zs[j]));
            if (v < res.min_abs) {
                res.min_abs = v;
                res.argmin_z = zs[i];
                res.argmin_w = zs[j];
            }
        }

    if (refine) {
        // pattern search over the closure near the observed minimizer
        complex z = res.argmin_z, w = res.argmin_w;
        double step = 0.1 * domain.inradius();
        auto inside_closure = [&](complex q) {
            // allow boundary points: test against a hair-enlarged domain
            if (auto* d = domain.as<Disc>()) return std::abs(q - d->center) <= d->radius + 1e-12;
            if (auto* c = domain.as<CircleDomainSpec>()) {
                if (std::abs(q - c->outer.center) > c->outer.radius + 1e-12) return false;
                for (auto& h : c->holes)
                    if (std::abs(q - h.center) < h.radius - 1e-12) return false;
                return true;
            }
            return contains(domain, {q});
        };
        static const complex dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 0}};
        for (int it = 0; it < 200 && step > 1e-9; ++it) {
            bool improved = false;
            for (int dz = 0; dz < 5 && !improved; ++dz)
                for (int dw = 0; dw < 5 && !improved; ++dw) {
                    if (dz == 4 && dw == 4) continue;
                    complex zq = z + step * dirs[dz];
                    complex wq = w + step * dirs[dw];
                    if (!inside_closure(zq) || !inside_closure(wq)) continue;
                    double v = std::abs(F(zq, wq));
                    if (v < res.min_abs - 1e-15) {
                        res.min_abs = v;
                        z = zq;
                        w = wq;
                        improved = true;
                    }
                }
            if (!improved) step *= 0.5;
        }
        res.argmin_z = z;
        res.argmin_w = w;
    }
    return res;
}

// ---------------------------------------------------------------------------
// named maps

HolomorphicMap exp_counterexample_map() {
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    Expr s = z1 + z2;
    HolomorphicMap f({Expr::exp_of(s) + z1, s}, Domain::unit_polydisc(2));
    // closed-form inverse from the same construction
    Expr w1 = Expr::var(0, 2), w2 = Expr::var(1, 2);
    auto inv = std::make_shared<HolomorphicMap>(
        std::vector<Expr>{w1 - Expr::exp_of(w2), w2 - w1 + Expr::exp_of(w2)});
    f.register_inverse(inv);
    return f;
}

HolomorphicMap bergman_coordinate_map() {
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    Expr one = Expr::constant(1.0, 2);
    Expr denom = Expr::constant(3.0, 2) - z1 - z2;
    return HolomorphicMap({one / denom, z1}, Domain::unit_polydisc(2));
}

HolomorphicMap one_point_qdp_map() {
    Expr z1 = Expr::var(0, 2), z2 = Expr::var(1, 2);
    return HolomorphicMap({Expr::int_pow(z1, 2) - z2, z1 + z2});
}

HolomorphicMap quadratic_disc_map(complex c) {
    Expr z = Expr::var(0, 1);
    return HolomorphicMap({z + Expr::constant(c, 1) * Expr::int_pow(z, 2)}, Domain::unit_disc());
}

HolomorphicMap parse_map(const nlohmann::json& spec, int nvars) {
    if (!spec.is_array() || spec.empty())
        fail(ErrorCode::SpecParseError, "map spec must be a non-empty component list");
    std::vector<Expr> comps;
    for (auto& c : spec) comps.push_back(parse_expr(c, nvars));
    return HolomorphicMap(std::move(comps));
}

} // namespace qd
