#include "qd/homotopy.hpp"

#include <algorithm>
#include <cmath>

#include "qd/errors.hpp"

namespace qd {

HolomorphicMap dilation_homotopy(const HolomorphicMap& f, double t) {
    if (f.dim_in() != 1) fail(ErrorCode::DimensionMismatch, "dilation_homotopy: planar maps only");
    complex f0 = f.evaluate({complex(0.0)})[0];
    if (std::abs(f0) > 1e-12) fail(ErrorCode::NotOriginFixing, "dilation homotopy needs f(0) = 0");
    if (t == 0.0) {
        Jet j = f.component(0).lift({complex(0.0)}, 1);
        complex fp0 = derivative_at(j, MultiIndex({1}));
        return HolomorphicMap({Expr::constant(fp0, 1) * Expr::var(0, 1)}, Domain::unit_disc());
    }
    Expr scaled = Expr::compose(f.component(0), {Expr::constant(t, 1) * Expr::var(0, 1)});
    return HolomorphicMap({Expr::constant(1.0 / t, 1) * scaled}, Domain::unit_disc());
}

HolomorphicMap straight_line_homotopy(const HolomorphicMap& f, const HolomorphicMap& g, double t) {
    if (f.dim_in() != g.dim_in() || f.dim_out() != g.dim_out())
        fail(ErrorCode::DimensionMismatch, "straight_line_homotopy: dimensions differ");
    std::vector<Expr> comps;
    for (int i = 0; i < f.dim_out(); ++i)
        comps.push_back(Expr::constant(1.0 - t, f.dim_in()) * f.component(i) +
                        Expr::constant(t, f.dim_in()) * g.component(i));
    return HolomorphicMap(std::move(comps), f.declared_domain());
}

double univalence_radius(const HolomorphicMap& f, int resolution, double bisection_tol) {
    if (f.dim_in() != 1) fail(ErrorCode::DimensionMismatch, "univalence_radius: planar maps only");
    auto univalent_on = [&](double rho) {
        auto disc = Domain::disc(0.0, rho);
        return injectivity_scan(f, *disc, resolution).injective_on_sample;
    };
    if (univalent_on(1.0)) return 1.0;
    double lo = 1.0 / 64.0, hi = 1.0;
    while (!univalent_on(lo)) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-6) return 0.0;
    }
    while (hi - lo > bisection_tol) {
        double mid = 0.5 * (lo + hi);
        (univalent_on(mid) ? lo : hi) = mid;
    }
    return lo;
}

double RescalingSchedule::eval(double t) const {
    const double plateau = 0.5 * m_eff;
    if (t <= 0.5 * t1 || t >= 0.5 * (1.0 + t2)) return 1.0;
    if (t >= t1 && t <= t2) return plateau;
    if (t < t1) return -((2.0 - m_eff) / t1) * (t - 0.5 * t1) + 1.0;
    return ((2.0 - m_eff) / (1.0 - t2)) * (t - 0.5 * (1.0 + t2)) + 1.0;
}

RescalingSchedule rescaling_schedule(const std::vector<std::pair<double, double>>& r_samples, double t1,
                                     double t2, double m) {
    if (!(0.0 < t1 && t1 < t2 && t2 < 1.0))
        fail(ErrorCode::ScheduleInfeasible, "need 0 < t1 < t2 < 1");
    if (!(m > 0.0)) fail(ErrorCode::ScheduleInfeasible, "univalence-radius minimum must be positive");
    RescalingSchedule k;
    k.t1 = t1;
    k.t2 = t2;
    k.m_eff = std::min(m, 2.0);
    for (auto& [t, r] : r_samples)
        if (k.eval(t) > r + 1e-12)
            fail(ErrorCode::ScheduleInfeasible,
                 "schedule exceeds the univalence radius at t = " + std::to_string(t));
    return k;
}

HomotopySchedule build_straight_line_schedule(const HolomorphicMap& f, const HolomorphicMap& g,
                                              int t_count, int resolution, double bisection_tol) {
    HomotopySchedule sched;
    for (int i = 0; i < t_count; ++i) {
        double t = t_count == 1 ? 0.0 : static_cast<double>(i) / (t_count - 1);
        sched.t_samples.push_back(t);
        HolomorphicMap phi = straight_line_homotopy(f, g, t);
        sched.r_hat.push_back(univalence_radius(phi, resolution, bisection_tol));
    }
    const double full = 1.0 - 1e-6;
    std::size_t lead = 0;
    while (lead + 1 < sched.t_samples.size() && sched.r_hat[lead + 1] >= full) ++lead;
    std::size_t tail = sched.t_samples.size() - 1;
    while (tail > 0 && sched.r_hat[tail - 1] >= full) --tail;
    sched.t1 = std::max(sched.t_samples[lead], 1e-3);
    sched.t2 = std::min(sched.t_samples[tail], 1.0 - 1e-3);
    if (sched.t1 >= sched.t2) {
        sched.t1 = 0.45;
        sched.t2 = 0.55;
    }
    sched.m = *std::min_element(sched.r_hat.begin(), sched.r_hat.end());
    std::vector<std::pair<double, double>> samples;
    for (std::size_t i = 0; i < sched.t_samples.size(); ++i)
        samples.emplace_back(sched.t_samples[i], sched.r_hat[i]);
    sched.k = rescaling_schedule(samples, sched.t1, sched.t2, sched.m);
    return sched;
}

EpsilonCriterion epsilon_criterion(const HolomorphicMap& f, const Domain& domain) {
    if (!domain.is_planar()) fail(ErrorCode::DimensionMismatch, "epsilon_criterion: planar domains only");
    EpsilonCriterion crit;
    crit.m_hat = divided_difference_min(f, domain).min_abs;
    if (domain.as<CircleDomainSpec>() && !domain.as<CircleDomainSpec>()->holes.empty()) {
        crit.chord_arc = kPi / 2.0;
    } else if (domain.as<Disc>()) {
        crit.chord_arc = 1.0; // convex: straight segments
    } else {
        crit.chord_arc = std::max(1.0, chord_arc_ratio_estimate(domain, 1000, 7).ratio);
    }
    crit.epsilon = crit.m_hat / crit.chord_arc;
    return crit;
}

// ---------------------------------------------------------------------------
// dilation trace

namespace {

double identity_distance(const QuadratureIdentity& a, const QuadratureIdentity& b) {
    double jump = 0.0;
    for (auto& ta : a.terms()) {
        double best = std::abs(ta.coefficient); // unmatched term counts fully
        for (auto& tb : b.terms())
            if (ta.alpha == tb.alpha)
                best = std::min(best, std::abs(ta.coefficient - tb.coefficient) + dist(ta.node, tb.node));
        jump = std::max(jump, best);
    }
    for (auto& tb : b.terms()) {
        bool matched = false;
        for (auto& ta : a.terms()) matched = matched || ta.alpha == tb.alpha;
        if (!matched) jump = std::max(jump, std::abs(tb.coefficient));
    }
    return jump;
}

} // namespace

DilationTrace dilation_qd_trace(const HolomorphicMap& f, const std::vector<double>& t_samples,
                                const DilationTraceOptions& options) {
    DomainPtr disc = Domain::unit_disc();
    // precondition: f' lies in the disc's Bergman span
    {
        Expr fp = f.component(0).derivative(0);
        auto grid = membership_node_grid(*disc, options.node_per_axis);
        MembershipTrace t = membership_residual(fp, disc, grid, options.membership_order);
        if (t.verdict != MembershipVerdict::InSpan)
            fail(ErrorCode::URepresentationMismatch,
                 "f' is not numerically in the Bergman span of the disc");
    }

    DilationTrace trace;
    for (double t : t_samples) {
        HolomorphicMap phi = dilation_homotopy(f, t);
        auto phi_ptr = std::make_shared<HolomorphicMap>(phi);
        Expr u = phi.component(0).derivative(0);
        auto grid = membership_node_grid(*disc, options.node_per_axis);
        MembershipTrace fit = membership_residual(u, disc, grid, options.membership_order);
        if (fit.verdict != MembershipVerdict::InSpan)
            fail(ErrorCode::URepresentationMismatch,
                 "phi_t' left the Bergman span fit at t = " + std::to_string(t));

        QuadratureIdentity qi = extract_quadrature_identity(
            phi_ptr, *fit.fitted, std::max(1, fit.fitted->max_order()));
        VerifyOptions vo;
        vo.max_degree = options.verify_degree;
        vo.tolerance = options.verify_tolerance;
        vo.scheme = options.scheme;
        VerificationReport rep = verify_identity(qi, vo);
        trace.all_pass = trace.all_pass && rep.pass;
        trace.entries.push_back({t, std::move(qi), std::move(rep), fit.best_residual});
    }
    for (std::size_t i = 1; i < trace.entries.size(); ++i)
        trace.max_coefficient_jump =
            std::max(trace.max_coefficient_jump,
                     identity_distance(trace.entries[i - 1].identity, trace.entries[i].identity));
    return trace;
}

// ---------------------------------------------------------------------------
// convex deformation

DeformResult deform_convex(const DeformationRecipe& recipe, const DeformOptions& options) {
    const DomainPtr& base = recipe.base;
    const int n = base->dimension();
    if (n < 2) fail(ErrorCode::DimensionMismatch, "deform_convex: needs dimension >= 2");
    if (recipe.gamma.nvars() != n - 1)
        fail(ErrorCode::DimensionMismatch, "deform_convex: gamma must have n-1 variables");
    if (recipe.g.domain() != base && recipe.g.domain()->dimension() != n)
        fail(ErrorCode::DimensionMismatch, "deform_convex: g must live on the base domain");

    Expr g_expr = recipe.g.as_expr();

    // ||g - 1|| on a closure sample must stay below 1 so U is one-to-one in z_n
    {
        double worst = 0.0;
        for (auto& z : sample_interior(*base, SampleStrategy::QuasiRandom, 200, 23))
            worst = std::max(worst, std::abs(g_expr.eval(z) - complex(1.0)));
        if (auto* p = base->as<PolydiscSpec>()) {
            const int steps = 32;
            std::vector<int> idx(static_cast<std::size_t>(n), 0);
            for (;;) {
                Point z(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    double th = 2.0 * kPi * idx[static_cast<std::size_t>(i)] / steps;
                    z[i] = p->axes[static_cast<std::size_t>(i)].center +
                           p->axes[static_cast<std::size_t>(i)].radius * std::exp(complex(0, th));
                }
                worst = std::max(worst, std::abs(g_expr.eval(z) - complex(1.0)));
                int carry = n - 1;
                while (carry >= 0) {
                    if (++idx[static_cast<std::size_t>(carry)] < steps) break;
                    idx[static_cast<std::size_t>(carry)] = 0;
                    --carry;
                }
                if (carry < 0) break;
            }
        }
        if (worst >= 1.0)
            fail(ErrorCode::UnivalenceSampleFailure,
                 "||g - 1|| = " + std::to_string(worst) + " >= 1 on the closure sample");
    }
    // the graph of gamma must stay inside the base
    for (auto& z : sample_interior(*base, SampleStrategy::QuasiRandom, 100, 29)) {
        Point zprime(z.begin(), z.end() - 1);
        Point graph = zprime;
        graph.push_back(recipe.gamma.eval(zprime));
        if (!contains(*base, graph))
            fail(ErrorCode::OutsideDomain, "gamma graph leaves the base domain");
    }

    std::vector<Expr> comps;
    for (int i = 0; i < n - 1; ++i) comps.push_back(Expr::var(i, n));
    Expr U = Expr::span_integral(g_expr, recipe.gamma);
    std::vector<Expr> embed;
    for (int i = 0; i < n - 1; ++i) embed.push_back(Expr::var(i, n));
    comps.push_back(U + Expr::compose(recipe.gamma, embed));
    auto f = std::make_shared<HolomorphicMap>(std::move(comps), base);

    // Jacobian determinant must reproduce g
    double jacobian_residual = 0.0;
    auto grid = sample_interior(*base, SampleStrategy::QuasiRandom, options.jacobian_grid, 31);
    for (auto& z : grid)
        jacobian_residual =
            std::max(jacobian_residual, std::abs(jacobian_determinant(*f, z) - recipe.g.evaluate(z)));

    InjectivityReport injectivity = injectivity_scan(*f, *base, options.scan_resolution);
    if (!injectivity.injective_on_sample)
        fail(ErrorCode::UnivalenceSampleFailure, "deformation map failed the injectivity scan");

    QuadratureIdentity identity =
        extract_quadrature_identity(f, recipe.g, std::max(1, recipe.g.max_order()));

    VerifyOptions vo;
    vo.max_degree = options.verify_degree;
    vo.tolerance = options.verify_tolerance;
    vo.scheme = options.scheme;
    VerificationReport report = verify_identity(identity, vo);

    DeformResult result{f, std::move(identity), std::move(report), injectivity, jacobian_residual, 0.0};

    // closeness on the distinguished boundary (holomorphic components take
    // their sup there) plus an interior sample
    double closeness = 0.0;
    auto measure = [&](const Point& z) {
        Point fz = f->evaluate(z);
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) d2 += std::norm(fz[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)]);
        closeness = std::max(closeness, std::sqrt(d2));
    };
    if (auto* p = base->as<PolydiscSpec>()) {
        const int steps = 64;
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        for (;;) {
            Point z(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                double th = 2.0 * kPi * idx[static_cast<std::size_t>(i)] / steps;
                z[i] = p->axes[static_cast<std::size_t>(i)].center +
                       p->axes[static_cast<std::size_t>(i)].radius * std::exp(complex(0, th));
            }
            measure(z);
            int carry = n - 1;
            while (carry >= 0) {
                if (++idx[static_cast<std::size_t>(carry)] < steps) break;
                idx[static_cast<std::size_t>(carry)] = 0;
                --carry;
            }
            if (carry < 0) break;
        }
    }
    for (auto& z : grid) measure(z);
    result.closeness = closeness;
    return result;
}

} // namespace qd
