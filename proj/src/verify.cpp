#include "qd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qd/errors.hpp"
#include "qd/gauss.hpp"
#include "qd/parallel.hpp"
#include "qd/sampling.hpp"

namespace qd {

nlohmann::json IntegrationScheme::to_json() const {
    if (kind == Kind::TensorGauss)
        return {{"kind", "tensor-gauss"}, {"radial_order", radial_order}, {"angular_order", angular_order}};
    return {{"kind", "quasi-monte-carlo"}, {"samples", samples}, {"seed", seed}};
}

// ---------------------------------------------------------------------------
// tensor rules

namespace {

MaterializedRule planar_polar_rule(const Disc& d, int n_r, int n_theta) {
    MaterializedRule rule;
    auto gl = gauss_legendre(n_r);
    rule.nodes.reserve(static_cast<std::size_t>(n_r) * n_theta);
    rule.weights.reserve(static_cast<std::size_t>(n_r) * n_theta);
    for (int i = 0; i < n_r; ++i) {
        double rho = 0.5 * (gl->x[i] + 1.0) * d.radius;
        double wr = 0.5 * gl->w[i] * d.radius;
        for (int k = 0; k < n_theta; ++k) {
            double th = 2.0 * kPi * k / n_theta;
            rule.nodes.push_back({d.center + rho * std::exp(complex(0, th))});
            rule.weights.push_back(wr * rho * 2.0 * kPi / n_theta);
        }
    }
    return rule;
}

MaterializedRule tensor_product(const MaterializedRule& a, const MaterializedRule& b) {
    MaterializedRule rule;
    rule.nodes.reserve(a.nodes.size() * b.nodes.size());
    rule.weights.reserve(a.nodes.size() * b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        for (std::size_t j = 0; j < b.nodes.size(); ++j) {
            Point p = a.nodes[i];
            p.insert(p.end(), b.nodes[j].begin(), b.nodes[j].end());
            rule.nodes.push_back(std::move(p));
            rule.weights.push_back(a.weights[i] * b.weights[j]);
        }
    return rule;
}

MaterializedRule ball2_rule(const BallSpec& b, int n_r, int n_theta) {
    // slice in the first coordinate; the inner disc radius sqrt(r^2 - rho1^2)
    MaterializedRule rule;
    auto gl = gauss_legendre(n_r);
    for (int i1 = 0; i1 < n_r; ++i1) {
        double rho1 = 0.5 * (gl->x[i1] + 1.0) * b.radius;
        double w1 = 0.5 * gl->w[i1] * b.radius * rho1 * 2.0 * kPi / n_theta;
        double r2max = std::sqrt(std::max(0.0, b.radius * b.radius - rho1 * rho1));
        for (int i2 = 0; i2 < n_r; ++i2) {
            double rho2 = 0.5 * (gl->x[i2] + 1.0) * r2max;
            double w2 = 0.5 * gl->w[i2] * r2max * rho2 * 2.0 * kPi / n_theta;
            for (int k1 = 0; k1 < n_theta; ++k1)
                for (int k2 = 0; k2 < n_theta; ++k2) {
                    double t1 = 2.0 * kPi * k1 / n_theta;
                    double t2 = 2.0 * kPi * k2 / n_theta;
                    rule.nodes.push_back({b.center[0] + rho1 * std::exp(complex(0, t1)),
                                          b.center[1] + rho2 * std::exp(complex(0, t2))});
                    rule.weights.push_back(w1 * w2);
                }
        }
    }
    return rule;
}

MaterializedRule tensor_rule(const Domain& domain, const IntegrationScheme& scheme) {
    if (auto* d = domain.as<Disc>()) {
        MaterializedRule r = planar_polar_rule(*d, scheme.radial_order, scheme.angular_order);
        r.description = "tensor-gauss polar on disc";
        return r;
    }
    if (auto* p = domain.as<PolydiscSpec>()) {
        MaterializedRule r = planar_polar_rule(p->axes[0], scheme.radial_order, scheme.angular_order);
        for (std::size_t i = 1; i < p->axes.size(); ++i)
            r = tensor_product(r, planar_polar_rule(p->axes[i], scheme.radial_order, scheme.angular_order));
        r.description = "tensor-gauss polar on polydisc";
        return r;
    }
    if (auto* p = domain.as<ProductSpec>()) {
        MaterializedRule r = tensor_rule(*p->factors[0], scheme);
        for (std::size_t i = 1; i < p->factors.size(); ++i)
            r = tensor_product(r, tensor_rule(*p->factors[i], scheme));
        r.description = "tensor-gauss polar on product";
        return r;
    }
    if (auto* b = domain.as<BallSpec>()) {
        if (b->n == 1) {
            MaterializedRule r = planar_polar_rule(Disc{b->center[0], b->radius}, scheme.radial_order,
                                                   scheme.angular_order);
            r.description = "tensor-gauss polar on disc";
            return r;
        }
        if (b->n == 2) {
            MaterializedRule r = ball2_rule(*b, scheme.radial_order, scheme.angular_order);
            r.description = "tensor-gauss sliced polar on ball";
            return r;
        }
        fail(ErrorCode::UnsupportedDomain, "tensor rule on balls supports n <= 2");
    }
    if (auto* im = domain.as<ImageSpec>()) {
        MaterializedRule base = tensor_rule(*im->base, scheme);
        Expr u = im->map->jacobian_expr();
        MaterializedRule r;
        r.nodes.resize(base.nodes.size());
        r.weights.resize(base.nodes.size());
        parallel_blocks(base.nodes.size(), 64, [&](int, std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                r.nodes[k] = im->map->evaluate(base.nodes[k]);
                r.weights[k] = base.weights[k] * std::norm(u.eval(base.nodes[k]));
            }
        });
        r.description = "change-of-variables pullback (|u|^2 weights) of " + base.description;
        return r;
    }
    fail(ErrorCode::UnsupportedDomain, "no tensor integration rule for this domain");
}

// ---------------------------------------------------------------------------
// QMC rules

struct RealBox {
    std::vector<double> lo, hi; // 2n real axes
    double volume() const {
        double v = 1.0;
        for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
        return v;
    }
};

RealBox real_bounding_box(const Domain& domain) {
    RealBox box;
    auto add_axis = [&](complex center, double half) {
        box.lo.push_back(center.real() - half);
        box.hi.push_back(center.real() + half);
        box.lo.push_back(center.imag() - half);
        box.hi.push_back(center.imag() + half);
    };
    if (auto* d = domain.as<Disc>()) {
        add_axis(d->center, d->radius);
    } else if (auto* p = domain.as<PolydiscSpec>()) {
        for (auto& ax : p->axes) add_axis(ax.center, ax.radius);
    } else if (auto* b = domain.as<BallSpec>()) {
        for (int i = 0; i < b->n; ++i) add_axis(b->center[i], b->radius);
    } else if (auto* p = domain.as<ProductSpec>()) {
        for (auto& f : p->factors) {
            RealBox fb = real_bounding_box(*f);
            box.lo.insert(box.lo.end(), fb.lo.begin(), fb.lo.end());
            box.hi.insert(box.hi.end(), fb.hi.begin(), fb.hi.end());
        }
    } else if (auto* c = domain.as<CircleDomainSpec>()) {
        add_axis(c->outer.center, c->outer.radius);
    } else {
        fail(ErrorCode::UnsupportedDomain, "real_bounding_box: unhandled domain");
    }
    return box;
}

MaterializedRule qmc_canonical_rule(const Domain& domain, const IntegrationScheme& scheme) {
    RealBox box = real_bounding_box(domain);
    const int n = domain.dimension();
    Halton seq(2 * n, scheme.seed);
    MaterializedRule rule;
    const double w = box.volume() / static_cast<double>(scheme.samples);
    for (long s = 0; s < scheme.samples; ++s) {
        auto u = seq.next();
        Point z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double re = box.lo[2 * i] + u[2 * i] * (box.hi[2 * i] - box.lo[2 * i]);
            double imv = box.lo[2 * i + 1] + u[2 * i + 1] * (box.hi[2 * i + 1] - box.lo[2 * i + 1]);
            z[i] = complex(re, imv);
        }
        if (!contains(domain, z)) continue;
        rule.nodes.push_back(std::move(z));
        rule.weights.push_back(w);
    }
    rule.description = "qmc rejection in bounding box";
    return rule;
}

// axis-aligned cell cover of the image built from forward samples; sampling
// the cover instead of the plain bounding box keeps the rejection rate sane
struct CellCover {
    RealBox box;
    int grid = 24; // cells per real axis
    std::vector<std::size_t> cells;
    double cell_volume = 0.0;
};

CellCover build_image_cover(const ImageSpec& im) {
    const int n = im.base->dimension();
    const int axes = 2 * n;

    std::vector<Point> forward;
    auto push_image = [&](const Point& z) { forward.push_back(im.map->evaluate(z)); };
    // interior fill
    for (auto& z : sample_interior(*im.base, SampleStrategy::QuasiRandom, 60000, 5)) push_image(z);
    // closure: scale canonical domains toward the boundary
    Point center = im.base->reference_center();
    for (double scale : {0.9, 0.97, 0.995, 1.0}) {
        Halton seq(axes, 11);
        RealBox bb = real_bounding_box(*im.base);
        for (int s = 0; s < 60000; ++s) {
            auto u = seq.next();
            Point z(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                z[i] = complex(bb.lo[2 * i] + u[2 * i] * (bb.hi[2 * i] - bb.lo[2 * i]),
                               bb.lo[2 * i + 1] + u[2 * i + 1] * (bb.hi[2 * i + 1] - bb.lo[2 * i + 1]));
            // radial scaling toward the closure of the base
            for (int i = 0; i < n; ++i) z[i] = center[i] + scale * (z[i] - center[i]);
            if (scale < 1.0) {
                if (contains(*im.base, z)) push_image(z);
            } else {
                // project onto the distinguished boundary for polydiscs/discs
                Point zb = z;
                bool ok = true;
                if (auto* p = im.base->as<PolydiscSpec>()) {
                    for (int i = 0; i < n; ++i) {
                        complex rel = zb[i] - p->axes[static_cast<std::size_t>(i)].center;
                        double m = std::abs(rel);
                        if (m < 1e-12) {
                            ok = false;
                            break;
                        }
                        zb[i] = p->axes[static_cast<std::size_t>(i)].center +
                                rel / m * p->axes[static_cast<std::size_t>(i)].radius;
                    }
                } else if (auto* d = im.base->as<Disc>()) {
                    complex rel = zb[0] - d->center;
                    double m = std::abs(rel);
                    if (m < 1e-12) ok = false;
                    else zb[0] = d->center + rel / m * d->radius;
                } else {
                    ok = false;
                }
                if (ok) push_image(zb);
            }
        }
    }

    CellCover cover;
    cover.box.lo.assign(static_cast<std::size_t>(axes), std::numeric_limits<double>::infinity());
    cover.box.hi.assign(static_cast<std::size_t>(axes), -std::numeric_limits<double>::infinity());
    for (auto& p : forward)
        for (int i = 0; i < n; ++i) {
            cover.box.lo[2 * i] = std::min(cover.box.lo[2 * i], p[i].real());
            cover.box.hi[2 * i] = std::max(cover.box.hi[2 * i], p[i].real());
            cover.box.lo[2 * i + 1] = std::min(cover.box.lo[2 * i + 1], p[i].imag());
            cover.box.hi[2 * i + 1] = std::max(cover.box.hi[2 * i + 1], p[i].imag());
        }
    for (int a = 0; a < axes; ++a) {
        double pad = 0.02 * (cover.box.hi[a] - cover.box.lo[a]) + 1e-9;
        cover.box.lo[a] -= pad;
        cover.box.hi[a] += pad;
    }

    const int g = cover.grid;
    std::size_t total = 1;
    for (int a = 0; a < axes; ++a) total *= static_cast<std::size_t>(g);
    std::vector<char> marked(total, 0);
    auto flat = [&](const std::vector<int>& idx) {
        std::size_t key = 0;
        for (int a = 0; a < axes; ++a) key = key * g + static_cast<std::size_t>(idx[a]);
        return key;
    };
    std::vector<int> idx(static_cast<std::size_t>(axes));
    for (auto& p : forward) {
        for (int i = 0; i < n; ++i) {
            double xs[2] = {p[i].real(), p[i].imag()};
            for (int c = 0; c < 2; ++c) {
                int a = 2 * i + c;
                double t = (xs[c] - cover.box.lo[a]) / (cover.box.hi[a] - cover.box.lo[a]);
                idx[a] = std::clamp(static_cast<int>(t * g), 0, g - 1);
            }
        }
        marked[flat(idx)] = 1;
    }
    // dilate by 2 cells (Chebyshev) to cover slivers between forward samples
    std::vector<char> dilated = marked;
    std::vector<int> nb(static_cast<std::size_t>(axes));
    for (std::size_t cell = 0; cell < total; ++cell) {
        if (!marked[cell]) continue;
        std::size_t rem = cell;
        for (int a = axes - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % g);
            rem /= g;
        }
        std::vector<int> off(static_cast<std::size_t>(axes), -2);
        for (;;) {
            bool ok = true;
            for (int a = 0; a < axes; ++a) {
                nb[a] = idx[a] + off[a];
                if (nb[a] < 0 || nb[a] >= g) {
                    ok = false;
                    break;
                }
            }
            if (ok) dilated[flat(nb)] = 1;
            int carry = axes - 1;
            while (carry >= 0) {
                if (++off[carry] <= 2) break;
                off[carry] = -2;
                --carry;
            }
            if (carry < 0) break;
        }
    }
    for (std::size_t cell = 0; cell < total; ++cell)
        if (dilated[cell]) cover.cells.push_back(cell);
    cover.cell_volume = cover.box.volume() / static_cast<double>(total);
    return cover;
}

MaterializedRule qmc_image_rule(const ImageSpec& im, const IntegrationScheme& scheme) {
    CellCover cover = build_image_cover(im);
    const int n = im.base->dimension();
    const int axes = 2 * n;
    const int g = cover.grid;
    Halton seq(axes + 1, scheme.seed);
    MaterializedRule rule;
    const double cover_volume = cover.cell_volume * static_cast<double>(cover.cells.size());
    const double w = cover_volume / static_cast<double>(scheme.samples);
    std::vector<int> idx(static_cast<std::size_t>(axes));
    for (long s = 0; s < scheme.samples; ++s) {
        auto u = seq.next();
        std::size_t pick = std::min<std::size_t>(static_cast<std::size_t>(u[0] * cover.cells.size()),
                                                 cover.cells.size() - 1);
        std::size_t cell = cover.cells[pick];
        for (int a = axes - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(cell % g);
            cell /= g;
        }
        Point z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double re = cover.box.lo[2 * i] +
                        (idx[2 * i] + u[2 * i + 1]) / g * (cover.box.hi[2 * i] - cover.box.lo[2 * i]);
            double imv = cover.box.lo[2 * i + 1] + (idx[2 * i + 1] + u[2 * i + 2]) / g *
                                                       (cover.box.hi[2 * i + 1] - cover.box.lo[2 * i + 1]);
            z[i] = complex(re, imv);
        }
        auto pre = invert_into(*im.map, z, *im.base);
        if (!pre || !contains(*im.base, *pre)) continue;
        rule.nodes.push_back(std::move(z));
        rule.weights.push_back(w);
    }
    rule.description = "qmc direct sampling of the image (cell-cover rejection, membership by inversion)";
    return rule;
}

} // namespace

MaterializedRule materialize_rule(const Domain& domain, const IntegrationScheme& scheme) {
    MaterializedRule rule;
    if (scheme.kind == IntegrationScheme::Kind::TensorGauss) {
        rule = tensor_rule(domain, scheme);
    } else if (auto* im = domain.as<ImageSpec>()) {
        rule = qmc_image_rule(*im, scheme);
    } else {
        rule = qmc_canonical_rule(domain, scheme);
    }
    rule.total_weight = 0.0;
    for (double w : rule.weights) rule.total_weight += w;

    if (auto vol = domain.known_volume()) {
        double tol = scheme.kind == IntegrationScheme::Kind::TensorGauss ? 1e-6 : 2e-2;
        if (std::abs(rule.total_weight - *vol) > tol * *vol)
            fail(ErrorCode::SchemeVolumeMismatch, "rule weight " + std::to_string(rule.total_weight) +
                                                      " vs volume " + std::to_string(*vol));
    }
    return rule;
}

// ---------------------------------------------------------------------------
// integration

std::vector<complex> integrate_many(const Domain& domain, const std::vector<Expr>& fs,
                                    const IntegrationScheme& scheme) {
    MaterializedRule rule = materialize_rule(domain, scheme);
    const std::size_t m = fs.size();
    const int n_blocks = 64;
    std::vector<std::vector<complex>> partial(n_blocks, std::vector<complex>(m, complex(0.0)));
    parallel_blocks(rule.nodes.size(), n_blocks, [&](int b, std::size_t lo, std::size_t hi) {
        auto& acc = partial[static_cast<std::size_t>(b)];
        for (std::size_t k = lo; k < hi; ++k)
            for (std::size_t j = 0; j < m; ++j)
                acc[j] += rule.weights[k] * fs[j].eval(rule.nodes[k]);
    });
    std::vector<complex> out(m, complex(0.0));
    for (int b = 0; b < n_blocks; ++b)
        for (std::size_t j = 0; j < m; ++j) out[j] += partial[static_cast<std::size_t>(b)][j];
    return out;
}

complex integrate(const Domain& domain, const Expr& f, const IntegrationScheme& scheme) {
    return integrate_many(domain, {f}, scheme)[0];
}

complex integrate_fn(const Domain& domain, const std::function<complex(const Point&)>& f,
                     const IntegrationScheme& scheme) {
    MaterializedRule rule = materialize_rule(domain, scheme);
    const int n_blocks = 64;
    std::vector<complex> partial(n_blocks, complex(0.0));
    parallel_blocks(rule.nodes.size(), n_blocks, [&](int b, std::size_t lo, std::size_t hi) {
        complex acc = 0.0;
        for (std::size_t k = lo; k < hi; ++k) acc += rule.weights[k] * f(rule.nodes[k]);
        partial[static_cast<std::size_t>(b)] = acc;
    });
    complex out = 0.0;
    for (auto& p : partial) out += p;
    return out;
}

// ---------------------------------------------------------------------------
// reports

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json tj = nlohmann::json::array();
    for (auto& t : tests)
        tj.push_back({{"test", t.label},
                      {"integral", {t.integral.real(), t.integral.imag()}},
                      {"node_sum", {t.node_sum.real(), t.node_sum.imag()}},
                      {"abs_residual", t.abs_residual},
                      {"rel_residual", t.rel_residual}});
    return {{"id", id},           {"tests", tj},   {"max_rel_residual", max_rel_residual},
            {"tolerance", tolerance}, {"pass", pass}, {"scheme", scheme_meta}};
}

std::vector<Expr> monomial_tests(int nvars, int max_degree) {
    std::vector<Expr> tests;
    for (auto& beta : enumerate_multi_indices(nvars, max_degree)) {
        Expr m = Expr::constant(1.0, nvars);
        for (int i = 0; i < nvars; ++i)
            if (beta.e[static_cast<std::size_t>(i)] > 0)
                m = m * Expr::int_pow(Expr::var(i, nvars), beta.e[static_cast<std::size_t>(i)]);
        tests.push_back(m);
    }
    return tests;
}

std::string monomial_label(const MultiIndex& beta) {
    std::string s = "z^(";
    for (int i = 0; i < beta.dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(beta.e[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

VerificationReport verify_identity(const QuadratureIdentity& q, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.tolerance = opts.tolerance;
    rep.scheme_meta = opts.scheme.to_json();

    std::vector<Expr> tests = opts.explicit_tests;
    std::vector<std::string> labels;
    const int n = q.domain()->dimension();
    if (tests.empty()) {
        tests = monomial_tests(n, opts.max_degree);
        for (auto& beta : enumerate_multi_indices(n, opts.max_degree)) labels.push_back(monomial_label(beta));
    } else {
        for (std::size_t i = 0; i < tests.size(); ++i) labels.push_back("test_" + std::to_string(i));
    }

    std::vector<complex> integrals = integrate_many(*q.domain(), tests, opts.scheme);
    rep.max_rel_residual = 0.0;
    for (std::size_t i = 0; i < tests.size(); ++i) {
        TestResidual tr;
        tr.label = labels[i];
        tr.integral = integrals[i];
        tr.node_sum = q.apply(tests[i]);
        tr.abs_residual = std::abs(tr.integral - tr.node_sum);
        tr.rel_residual =
            std::abs(tr.integral) > 1e-8 ? tr.abs_residual / std::abs(tr.integral) : tr.abs_residual;
        rep.max_rel_residual = std::max(rep.max_rel_residual, tr.rel_residual);
        rep.tests.push_back(std::move(tr));
    }
    rep.pass = rep.max_rel_residual < opts.tolerance;
    return rep;
}

ReproducingCheck reproducing_residuals(const KernelHandle& h, const std::vector<Point>& eval_points,
                                       int max_degree, const IntegrationScheme& scheme) {
    const Domain& dom = *h.domain;
    const int n = dom.dimension();
    MaterializedRule rule = materialize_rule(dom, scheme);
    auto betas = enumerate_multi_indices(n, max_degree);
    auto table = SimplexTable::get(n, max_degree);
    const std::size_t nz = eval_points.size(), nb = betas.size();

    const int n_blocks = 64;
    std::vector<std::vector<complex>> partial(n_blocks,
                                              std::vector<complex>(nz * nb, complex(0.0)));
    parallel_blocks(rule.nodes.size(), n_blocks, [&](int blk, std::size_t lo, std::size_t hi) {
        auto& acc = partial[static_cast<std::size_t>(blk)];
        std::vector<complex> mono(nb);
        std::vector<complex> kvals(nz);
        for (std::size_t k = lo; k < hi; ++k) {
            const Point& w = rule.nodes[k];
            // monomial values by graded recurrence
            for (std::size_t b = 0; b < nb; ++b) {
                const MultiIndex& beta = betas[b];
                if (beta.degree() == 0) {
                    mono[b] = 1.0;
                } else {
                    int v = 0;
                    while (beta.e[static_cast<std::size_t>(v)] == 0) ++v;
                    MultiIndex prev = beta;
                    prev.e[static_cast<std::size_t>(v)] -= 1;
                    mono[b] = mono[static_cast<std::size_t>(table->index_of(prev))] * w[v];
                }
            }
            for (std::size_t i = 0; i < nz; ++i) kvals[i] = kernel_eval(h, eval_points[i], w);
            for (std::size_t i = 0; i < nz; ++i)
                for (std::size_t b = 0; b < nb; ++b)
                    acc[i * nb + b] += rule.weights[k] * mono[b] * kvals[i];
        }
    });
    std::vector<complex> M(nz * nb, complex(0.0));
    for (auto& p : partial)
        for (std::size_t x = 0; x < M.size(); ++x) M[x] += p[x];

    ReproducingCheck check;
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t b = 0; b < nb; ++b) {
            complex expected = 1.0;
            for (int v = 0; v < n; ++v)
                for (int e = 0; e < betas[b].e[static_cast<std::size_t>(v)]; ++e)
                    expected *= eval_points[i][v];
            double abs_res = std::abs(M[i * nb + b] - expected);
            double res = std::abs(expected) > 1e-8 ? abs_res / std::abs(expected) : abs_res;
            if (res > check.max_residual) {
                check.max_residual = res;
                check.worst_label = monomial_label(betas[b]) + " @z" + std::to_string(i);
            }
        }
    return check;
}

// ---------------------------------------------------------------------------
// QDP table

nlohmann::json QdpTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows_json.push_back({{"alpha", rows[i].alpha.e},
                             {"verdict", verdict_name(rows[i].verdict)},
                             {"best_residual", rows[i].best_residual},
                             {"trace", traces[i].to_json()}});
    return {{"rows", rows_json}, {"all_in_span", all_in_span}};
}

QdpTable qdp_check(const HolomorphicMap& f, DomainPtr omega, int max_degree,
                   const std::vector<Point>& node_grid, int membership_order,
                   const MembershipConfig& config) {
    QdpTable table;
    Expr u = f.jacobian_expr();
    for (auto& alpha : enumerate_multi_indices(f.dim_out(), max_degree)) {
        Expr candidate = u;
        for (int i = 0; i < f.dim_out(); ++i)
            if (alpha.e[static_cast<std::size_t>(i)] > 0)
                candidate = candidate * Expr::int_pow(f.component(i), alpha.e[static_cast<std::size_t>(i)]);
        MembershipTrace trace = membership_residual(candidate, omega, node_grid, membership_order, config);
        table.rows.push_back({alpha, trace.verdict, trace.best_residual});
        table.all_in_span = table.all_in_span && trace.verdict == MembershipVerdict::InSpan;
        table.traces.push_back(std::move(trace));
    }
    return table;
}

} // namespace qd
