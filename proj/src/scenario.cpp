#include "qd/scenario.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "qd/errors.hpp"
#include "qd/svg.hpp"

namespace qd {

const std::vector<Scenario>& scenario_catalog() {
    static const std::vector<Scenario> catalog = {
        {"disc-mean-value", "identity", "mean-value identity of the unit disc"},
        {"bidisc-product", "identity", "product composition of planar identities on the bidisc"},
        {"cardioid", "identity", "two-term identity of the image of z + 0.3 z^2"},
        {"bergman-coordinate-not-qd", "membership",
         "Jacobian of (1/(3-z1-z2), z1) stays out of the bidisc span"},
        {"exp-qd-not-qdp", "qdp-check",
         "exp map image: quadrature domain whose span misses zeta_1^k"},
        {"nonalgebraic-kernel", "kernel", "transformed kernel of the exp map image"},
        {"one-point-qdp", "identity", "single-node identity of (z1^2 - z2, z1 + z2)"},
        {"dilation-homotopy", "homotopy", "identities along phi_t(z) = f(tz)/t"},
        {"straight-line-epsilon", "homotopy",
         "epsilon criterion and straight-line homotopies on the disc"},
        {"convex-deform", "deform", "bidisc deformation with Jacobian 1 + 0.4 z2"},
    };
    return catalog;
}

namespace {

nlohmann::json envelope(const std::string& id, const RunOptions& opt) {
    nlohmann::json j;
    j["schema"] = "qd-report/1";
    j["scenario"] = id;
    j["seed"] = opt.seed;
    if (opt.timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    return j;
}

// the closed form on the exp-map image:
//   (1/pi^2) (1 - (z1 - e^{z2}) conj(w1 - e^{w2}))^-2
//           (1 - (z2 - z1 + e^{z2}) conj(w2 - w1 + e^{w2}))^-2
complex exp_image_kernel_closed_form(const Point& zeta, const Point& omega) {
    complex a1 = zeta[0] - std::exp(zeta[1]);
    complex a2 = zeta[1] - zeta[0] + std::exp(zeta[1]);
    complex b1 = omega[0] - std::exp(omega[1]);
    complex b2 = omega[1] - omega[0] + std::exp(omega[1]);
    complex f1 = 1.0 - a1 * std::conj(b1);
    complex f2 = 1.0 - a2 * std::conj(b2);
    return 1.0 / (kPi * kPi * f1 * f1 * f2 * f2);
}

// the exact span representation of u(z1, z2) = 2 z1 + 1 on a centered bidisc
SpanElement one_point_u_repr(DomainPtr bidisc, double r) {
    double r4 = r * r * r * r, r6 = r4 * r * r;
    std::vector<SpanTerm> terms;
    terms.push_back({point2(0.0, 0.0), MultiIndex({0, 0}), kPi * kPi * r4});
    terms.push_back({point2(0.0, 0.0), MultiIndex({1, 0}), kPi * kPi * r6});
    return SpanElement(std::move(bidisc), std::move(terms));
}

void store_report(nlohmann::json& j, const char* key, const VerificationReport& rep) {
    j[key] = rep.to_json();
}

// ---------------------------------------------------------------------------

RunResult run_disc_mean_value(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("disc-mean-value", opt);
    DomainPtr disc = Domain::unit_disc();
    auto id_map = std::make_shared<HolomorphicMap>(HolomorphicMap::identity(1));
    SpanElement u = constant_span_element(disc);
    QuadratureIdentity qi = extract_quadrature_identity(id_map, u, 0, disc);

    VerifyOptions vo;
    vo.max_degree = opt.max_degree > 0 ? opt.max_degree : 10;
    vo.tolerance = 1e-8;
    vo.scheme = IntegrationScheme::tensor(48, 48);
    VerificationReport rep = verify_identity(qi, vo);
    rep.id = "disc-mean-value";

    res.report["identity"] = qi.to_json();
    store_report(res.report, "verification", rep);
    res.raw_failure = !rep.pass;
    res.overall_pass = rep.pass;
    return res;
}

RunResult run_bidisc_product(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("bidisc-product", opt);
    DomainPtr d1 = Domain::unit_disc(), d2 = Domain::unit_disc();
    SpanElement f1 = constant_span_element(d1), f2 = constant_span_element(d2);
    SpanElement prod = product_span({f1, f2});

    // composed element equals the product of the factors on a grid
    double worst = 0.0;
    auto grid = sample_interior(*prod.domain(), SampleStrategy::QuasiRandom, 200, opt.seed);
    for (auto& z : grid) {
        complex lhs = prod.evaluate(z);
        complex rhs = f1.evaluate({z[0]}) * f2.evaluate({z[1]});
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    res.report["product_vs_factors_max_diff"] = worst;

    auto id_map = std::make_shared<HolomorphicMap>(HolomorphicMap::identity(2));
    QuadratureIdentity qi = extract_quadrature_identity(id_map, prod, prod.max_order(), prod.domain());
    VerifyOptions vo;
    vo.max_degree = opt.max_degree > 0 ? opt.max_degree : 6;
    vo.tolerance = 1e-8;
    vo.scheme = IntegrationScheme::tensor(20, 24);
    VerificationReport rep = verify_identity(qi, vo);
    rep.id = "bidisc-product";

    res.report["identity"] = qi.to_json();
    store_report(res.report, "verification", rep);
    bool grid_ok = worst < 1e-10;
    res.report["product_check_pass"] = grid_ok;
    res.raw_failure = !rep.pass || !grid_ok;
    res.overall_pass = rep.pass && grid_ok;
    return res;
}

RunResult run_cardioid(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("cardioid", opt);
    DomainPtr disc = Domain::unit_disc();
    auto f = std::make_shared<HolomorphicMap>(quadratic_disc_map(0.3));

    Expr fp = f->component(0).derivative(0);
    MembershipTrace fit = membership_residual(fp, disc, membership_node_grid(*disc, 1), 3);
    res.report["membership"] = fit.to_json();
    if (fit.verdict != MembershipVerdict::InSpan) {
        res.raw_failure = true;
        res.overall_pass = false;
        return res;
    }
    QuadratureIdentity qi = extract_quadrature_identity(f, *fit.fitted, fit.fitted->max_order());
    VerifyOptions vo;
    vo.max_degree = opt.max_degree > 0 ? opt.max_degree : 8;
    vo.tolerance = 1e-5;
    vo.scheme = IntegrationScheme::tensor(48, 48);
    VerificationReport rep = verify_identity(qi, vo);
    rep.id = "cardioid";

    res.report["identity"] = qi.to_json();
    store_report(res.report, "verification", rep);
    if (!opt.svg_dir.empty())
        write_svg_file(opt.svg_dir + "/cardioid.svg", domain_svg(*Domain::image(disc, f)));
    res.raw_failure = !rep.pass;
    res.overall_pass = rep.pass;
    return res;
}

RunResult run_bergman_coordinate_not_qd(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("bergman-coordinate-not-qd", opt);
    DomainPtr bidisc = Domain::unit_polydisc(2);
    HolomorphicMap f = bergman_coordinate_map();
    Expr u = f.jacobian_expr();

    auto nodes = membership_node_grid(*bidisc, 4);
    MembershipTrace trace = membership_residual(u, bidisc, nodes, 6);
    res.report["candidate"] = "jacobian of (1/(3-z1-z2), z1)";
    res.report["membership"] = trace.to_json();
    res.report["expected_verdict"] = "not_in_span";

    // positive control: an explicitly constructed element fed back as raw input
    SpanElement control(bidisc, {SpanTerm{point2(0.0, 0.0), MultiIndex({0, 0}), kPi * kPi},
                                 SpanTerm{point2(0.0, 0.0), MultiIndex({1, 0}), 0.3 * kPi * kPi}});
    MembershipTrace control_trace = membership_residual(control.as_expr(), bidisc, nodes, 6);
    res.report["positive_control"] = control_trace.to_json();
    res.report["positive_control_expected_verdict"] = "in_span";

    bool matches = trace.verdict == MembershipVerdict::NotInSpan &&
                   control_trace.verdict == MembershipVerdict::InSpan;
    res.report["matches_expected"] = matches;
    res.raw_failure = trace.verdict != MembershipVerdict::InSpan; // raw negative present
    res.overall_pass = matches;
    return res;
}

RunResult run_exp_qd_not_qdp(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("exp-qd-not-qdp", opt);
    DomainPtr bidisc = Domain::unit_polydisc(2);
    auto f = std::make_shared<HolomorphicMap>(exp_counterexample_map());

    // u is identically 1
    double worst_u = 0.0;
    for (auto& z : sample_interior(*bidisc, SampleStrategy::TensorGrid, 400, 0))
        worst_u = std::max(worst_u, std::abs(jacobian_determinant(*f, z) - complex(1.0)));
    res.report["max_u_minus_1"] = worst_u;

    // identity: integral over V equals pi^2 g(1, 0)
    SpanElement u_repr = constant_span_element(bidisc);
    QuadratureIdentity qi = extract_quadrature_identity(f, u_repr, 0);
    res.report["identity"] = qi.to_json();

    VerifyOptions pullback;
    pullback.max_degree = 4;
    pullback.tolerance = 1e-5;
    pullback.scheme = IntegrationScheme::tensor(24, 24);
    VerificationReport rep_pb = verify_identity(qi, pullback);
    rep_pb.id = "exp-qd-not-qdp/pullback";
    store_report(res.report, "verification_pullback", rep_pb);

    VerifyOptions direct;
    direct.max_degree = 2;
    direct.tolerance = 1e-3;
    direct.scheme = IntegrationScheme::qmc(1'000'000, opt.seed);
    VerificationReport rep_qmc = verify_identity(qi, direct);
    rep_qmc.id = "exp-qd-not-qdp/qmc-direct";
    store_report(res.report, "verification_qmc", rep_qmc);

    // QDP table: u f^alpha membership; expected in_span exactly when alpha_1 = 0
    int degree = opt.max_degree > 0 ? opt.max_degree : 3;
    QdpTable table = qdp_check(*f, bidisc, degree, membership_node_grid(*bidisc, 3), 5);
    res.report["qdp"] = table.to_json();
    bool expected_ok = true;
    nlohmann::json expectations = nlohmann::json::array();
    for (auto& row : table.rows) {
        bool pure_second = row.alpha.e[0] == 0;
        bool pure_first = row.alpha.e[1] == 0 && row.alpha.e[0] >= 1;
        if (pure_second) {
            expectations.push_back({{"alpha", row.alpha.e}, {"expected", "in_span"}});
            expected_ok = expected_ok && row.verdict == MembershipVerdict::InSpan;
        } else if (pure_first) {
            expectations.push_back({{"alpha", row.alpha.e}, {"expected", "not_in_span"}});
            expected_ok = expected_ok && row.verdict == MembershipVerdict::NotInSpan;
        }
    }
    res.report["expected_verdicts"] = expectations;
    res.report["matches_expected"] = expected_ok;

    res.raw_failure = !table.all_in_span || !rep_pb.pass || !rep_qmc.pass;
    res.overall_pass = expected_ok && rep_pb.pass && rep_qmc.pass && worst_u < 1e-12;
    return res;
}

RunResult run_nonalgebraic_kernel(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("nonalgebraic-kernel", opt);
    DomainPtr bidisc = Domain::unit_polydisc(2);
    auto f = std::make_shared<HolomorphicMap>(exp_counterexample_map());
    DomainPtr V = Domain::image(bidisc, f);

    // transformed kernel vs the closed form at sampled pairs
    auto base_pts = sample_interior(*bidisc, SampleStrategy::QuasiRandom, 200, opt.seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        Point zeta = f->evaluate(base_pts[static_cast<std::size_t>(2 * i)]);
        Point omega = f->evaluate(base_pts[static_cast<std::size_t>(2 * i + 1)]);
        complex via_transform = transform_kernel(*f, bidisc, zeta, omega);
        complex closed = exp_image_kernel_closed_form(zeta, omega);
        worst = std::max(worst, std::abs(via_transform - closed) / std::max(1.0, std::abs(closed)));
    }
    res.report["max_closed_form_mismatch"] = worst;

    // numerical reproducing property on V through the pullback rule
    MaterializedRule rule = materialize_rule(*V, IntegrationScheme::tensor(20, 40));
    auto eval_base = sample_interior(*bidisc, SampleStrategy::QuasiRandom, 10, opt.seed + 1);
    std::vector<Point> zetas;
    for (auto& z : eval_base) {
        Point scaled = z;
        for (auto& c : scaled) c *= 0.6;
        zetas.push_back(f->evaluate(scaled));
    }
    auto betas = enumerate_multi_indices(2, 3);
    double worst_rep = 0.0;
    KernelHandle hV{V};
    for (auto& zeta : zetas) {
        std::vector<complex> acc(betas.size(), complex(0.0));
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            complex kv = std::conj(exp_image_kernel_closed_form(rule.nodes[k], zeta));
            for (std::size_t b = 0; b < betas.size(); ++b) {
                complex mono = 1.0;
                for (int v = 0; v < 2; ++v)
                    for (int e = 0; e < betas[b].e[static_cast<std::size_t>(v)]; ++e)
                        mono *= rule.nodes[k][static_cast<std::size_t>(v)];
                acc[b] += rule.weights[k] * mono * kv;
            }
        }
        for (std::size_t b = 0; b < betas.size(); ++b) {
            complex expect = 1.0;
            for (int v = 0; v < 2; ++v)
                for (int e = 0; e < betas[b].e[static_cast<std::size_t>(v)]; ++e)
                    expect *= zeta[static_cast<std::size_t>(v)];
            double r = std::abs(acc[b] - expect) / std::max(1.0, std::abs(expect));
            worst_rep = std::max(worst_rep, r);
        }
    }
    res.report["max_reproducing_residual"] = worst_rep;

    bool pass = worst < 1e-10 && worst_rep < 1e-4;
    res.report["pass"] = pass;
    res.raw_failure = !pass;
    res.overall_pass = pass;
    return res;
}

RunResult run_one_point_qdp(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("one-point-qdp", opt);
    const double r = 0.4;
    DomainPtr delta = Domain::polydisc({Disc{0.0, r}, Disc{0.0, r}});
    auto f = std::make_shared<HolomorphicMap>(one_point_qdp_map());

    // u = 2 z1 + 1 exactly
    double worst_u = 0.0;
    for (auto& z : sample_interior(*delta, SampleStrategy::TensorGrid, 400, 0))
        worst_u = std::max(worst_u, std::abs(jacobian_determinant(*f, z) - (2.0 * z[0] + 1.0)));
    res.report["max_u_mismatch"] = worst_u;

    InjectivityReport inj = injectivity_scan(*f, *delta, 200);
    res.report["injective_on_sample"] = inj.injective_on_sample;
    res.report["min_pair_separation_ratio"] = inj.min_pair_separation_ratio;

    int degree = opt.max_degree > 0 ? opt.max_degree : 2;
    QdpTable table = qdp_check(*f, delta, degree, membership_node_grid(*delta, 3), 5);
    res.report["qdp"] = table.to_json();

    SpanElement u_repr = one_point_u_repr(delta, r);
    QuadratureIdentity qi = extract_quadrature_identity(f, u_repr, 1);
    res.report["identity"] = qi.to_json();
    double node_spread = 0.0;
    for (auto& t : qi.terms()) node_spread = std::max(node_spread, norm2(t.node));
    res.report["max_node_distance_from_origin"] = node_spread;

    VerifyOptions vo;
    vo.max_degree = 6;
    vo.tolerance = 1e-5;
    vo.scheme = IntegrationScheme::tensor(32, 32);
    VerificationReport rep = verify_identity(qi, vo);
    rep.id = "one-point-qdp";
    store_report(res.report, "verification", rep);

    bool pass = worst_u < 1e-12 && inj.injective_on_sample && table.all_in_span && rep.pass &&
                node_spread < 1e-12;
    res.report["pass"] = pass;
    res.raw_failure = !pass;
    res.overall_pass = pass;
    return res;
}

RunResult run_dilation_homotopy(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("dilation-homotopy", opt);
    HolomorphicMap f = quadratic_disc_map(0.3);
    int frames = opt.frames > 0 ? opt.frames : 50;
    std::vector<double> ts;
    for (int i = 0; i < frames; ++i) ts.push_back(frames == 1 ? 1.0 : static_cast<double>(i) / (frames - 1));

    DilationTrace trace = dilation_qd_trace(f, ts);
    nlohmann::json entries = nlohmann::json::array();
    for (auto& e : trace.entries)
        entries.push_back({{"t", e.t},
                           {"identity", e.identity.to_json()},
                           {"max_rel_residual", e.report.max_rel_residual},
                           {"membership_residual", e.membership_residual},
                           {"pass", e.report.pass}});
    res.report["trace"] = entries;
    res.report["max_coefficient_jump"] = trace.max_coefficient_jump;
    res.report["all_pass"] = trace.all_pass;

    if (!opt.svg_dir.empty()) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            HolomorphicMap phi = dilation_homotopy(f, ts[i]);
            auto img = Domain::image(Domain::unit_disc(), std::make_shared<HolomorphicMap>(phi));
            char name[64];
            std::snprintf(name, sizeof(name), "/frame_%03zu.svg", i);
            write_svg_file(opt.svg_dir + name, domain_svg(*img));
        }
    }
    res.raw_failure = !trace.all_pass;
    res.overall_pass = trace.all_pass;
    return res;
}

RunResult run_straight_line_epsilon(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("straight-line-epsilon", opt);
    DomainPtr disc = Domain::unit_disc();
    HolomorphicMap id = HolomorphicMap::identity(1);

    EpsilonCriterion crit = epsilon_criterion(id, *disc);
    res.report["m_hat"] = crit.m_hat;
    res.report["chord_arc"] = crit.chord_arc;
    res.report["epsilon"] = crit.epsilon;

    // random cubic perturbations below the criterion keep sampled injectivity
    int trials = opt.frames > 0 ? opt.frames : 1000;
    std::mt19937_64 rng(opt.seed * 1000003ULL + 7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int failures = 0;
    std::vector<HolomorphicMap> accepted;
    for (int trial = 0; trial < trials; ++trial) {
        complex c1(unif(rng), unif(rng)), c2(unif(rng), unif(rng)), c3(unif(rng), unif(rng));
        double sup = 0.0;
        for (int k = 0; k < 512; ++k) {
            complex z = std::exp(complex(0, 2.0 * kPi * k / 512.0));
            sup = std::max(sup, std::abs(c1 + 2.0 * c2 * z + 3.0 * c3 * z * z));
        }
        double amp = 0.99 * crit.epsilon * (0.3 + 0.69 * (unif(rng) * 0.5 + 0.5)) / std::max(sup, 1e-12);
        Expr z = Expr::var(0, 1);
        Expr g_expr = z + Expr::constant(amp * c1, 1) * z +
                      Expr::constant(amp * c2, 1) * Expr::int_pow(z, 2) +
                      Expr::constant(amp * c3, 1) * Expr::int_pow(z, 3);
        HolomorphicMap g({g_expr}, disc);
        InjectivityReport rep = injectivity_scan(g, *disc, 200);
        if (!rep.injective_on_sample) ++failures;
        if (static_cast<int>(accepted.size()) < 5) accepted.push_back(std::move(g));
    }
    res.report["perturbation_trials"] = trials;
    res.report["injectivity_failures"] = failures;

    // straight-line homotopies against accepted perturbations
    nlohmann::json homotopies = nlohmann::json::array();
    bool homotopy_pass = true;
    for (std::size_t gi = 0; gi < accepted.size(); ++gi) {
        nlohmann::json per_t = nlohmann::json::array();
        for (int k = 0; k <= 10; ++k) {
            double t = k / 10.0;
            HolomorphicMap phi = straight_line_homotopy(id, accepted[gi], t);
            Expr up = phi.component(0).derivative(0);
            MembershipTrace fit = membership_residual(up, disc, membership_node_grid(*disc, 1), 3);
            bool ok = fit.verdict == MembershipVerdict::InSpan && fit.best_residual < 1e-6;
            double residual = 1.0;
            if (ok) {
                auto phi_ptr = std::make_shared<HolomorphicMap>(phi);
                QuadratureIdentity qi =
                    extract_quadrature_identity(phi_ptr, *fit.fitted, fit.fitted->max_order());
                VerifyOptions vo;
                vo.max_degree = 6;
                vo.tolerance = 1e-5;
                vo.scheme = IntegrationScheme::tensor(48, 48);
                VerificationReport rep = verify_identity(qi, vo);
                ok = rep.pass;
                residual = rep.max_rel_residual;
            }
            homotopy_pass = homotopy_pass && ok;
            per_t.push_back({{"t", t},
                             {"membership_residual", fit.best_residual},
                             {"verify_residual", residual},
                             {"pass", ok}});
        }
        homotopies.push_back({{"g_index", gi}, {"steps", per_t}});
    }
    res.report["homotopies"] = homotopies;

    bool pass = failures == 0 && homotopy_pass && std::abs(crit.epsilon - 1.0) < 1e-6;
    res.report["pass"] = pass;
    res.raw_failure = !pass;
    res.overall_pass = pass;
    return res;
}

RunResult run_convex_deform(const RunOptions& opt) {
    RunResult res;
    res.report = envelope("convex-deform", opt);
    DomainPtr bidisc = Domain::unit_polydisc(2);
    const double eps = 0.2;
    SpanElement g(bidisc, {SpanTerm{point2(0.0, 0.0), MultiIndex({0, 0}), kPi * kPi},
                           SpanTerm{point2(0.0, 0.0), MultiIndex({0, 1}), eps * kPi * kPi}});
    DeformationRecipe recipe{bidisc, Expr::constant(0.0, 1), g};
    DeformResult result = deform_convex(recipe);

    // the map should coincide with (z1, z2 + eps z2^2)
    double map_mismatch = 0.0;
    for (auto& z : sample_interior(*bidisc, SampleStrategy::QuasiRandom, 100, opt.seed)) {
        Point fz = result.f->evaluate(z);
        complex expect2 = z[1] + eps * z[1] * z[1];
        map_mismatch = std::max(map_mismatch,
                                std::max(std::abs(fz[0] - z[0]), std::abs(fz[1] - expect2)));
    }
    res.report["map_vs_closed_form"] = map_mismatch;
    res.report["jacobian_residual"] = result.jacobian_residual;
    res.report["closeness"] = result.closeness;
    res.report["identity"] = result.identity.to_json();
    store_report(res.report, "verification", result.report);

    if (!opt.svg_dir.empty()) {
        // planar slice through z1 = 0: boundary of the z2 cardioid section
        auto slice_map = std::make_shared<HolomorphicMap>(quadratic_disc_map(eps));
        write_svg_file(opt.svg_dir + "/convex-deform-slice.svg",
                       domain_svg(*Domain::image(Domain::unit_disc(), slice_map)));
    }

    bool pass = result.report.pass && result.jacobian_residual < 1e-10 &&
                std::abs(result.closeness - eps) < 1e-12 && map_mismatch < 1e-12;
    res.report["pass"] = pass;
    res.raw_failure = !pass;
    res.overall_pass = pass;
    return res;
}

} // namespace

RunResult run_scenario(const std::string& id, const RunOptions& options) {
    if (id == "disc-mean-value") return run_disc_mean_value(options);
    if (id == "bidisc-product") return run_bidisc_product(options);
    if (id == "cardioid") return run_cardioid(options);
    if (id == "bergman-coordinate-not-qd") return run_bergman_coordinate_not_qd(options);
    if (id == "exp-qd-not-qdp") return run_exp_qd_not_qdp(options);
    if (id == "nonalgebraic-kernel") return run_nonalgebraic_kernel(options);
    if (id == "one-point-qdp") return run_one_point_qdp(options);
    if (id == "dilation-homotopy") return run_dilation_homotopy(options);
    if (id == "straight-line-epsilon") return run_straight_line_epsilon(options);
    if (id == "convex-deform") return run_convex_deform(options);
    fail(ErrorCode::UnknownScenario, id);
}

} // namespace qd
