#include "qd/span.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "qd/errors.hpp"
#include "qd/parallel.hpp"

namespace qd {

namespace {

bool point_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

bool point_near(const Point& a, const Point& b) { return dist(a, b) < 1e-12; }

} // namespace

SpanElement::SpanElement(DomainPtr domain, std::vector<SpanTerm> terms)
    : domain_(std::move(domain)), terms_(std::move(terms)), cache_(std::make_shared<Cache>()) {
    if (!domain_) fail(ErrorCode::SpecParseError, "span element needs a domain");
    const int n = domain_->dimension();
    for (auto& t : terms_) {
        if (static_cast<int>(t.node.size()) != n || t.alpha.dim() != n)
            fail(ErrorCode::DimensionMismatch, "span term dimension != domain dimension");
        if (!contains(*domain_, t.node) && !domain_->as<ImageSpec>())
            fail(ErrorCode::OutsideDomain, "span node outside domain");
    }
    std::sort(terms_.begin(), terms_.end(), [](const SpanTerm& a, const SpanTerm& b) {
        if (!point_near(a.node, b.node)) return point_less(a.node, b.node);
        return a.alpha < b.alpha;
    });
    std::vector<SpanTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && point_near(merged.back().node, t.node) && merged.back().alpha == t.alpha) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const SpanTerm& t) { return std::abs(t.coefficient) == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

int SpanElement::max_order() const {
    int m = 0;
    for (auto& t : terms_) m = std::max(m, t.alpha.degree());
    return m;
}

Expr SpanElement::as_expr() const {
    std::lock_guard<std::mutex> lock(cache_->mtx);
    if (!cache_->expr) {
        const int n = domain_->dimension();
        Expr acc = Expr::constant(0.0, n);
        KernelHandle h{domain_};
        for (auto& t : terms_)
            acc = acc + Expr::constant(t.coefficient, n) * kernel_z_expr(h, t.node, t.alpha);
        cache_->expr = acc;
    }
    return *cache_->expr;
}

complex SpanElement::evaluate(const Point& z) const {
    try {
        return as_expr().eval(z);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedDomain) throw;
    }
    // image domains without an expression form: term-by-term kernel derivatives
    KernelHandle h{domain_};
    complex acc = 0.0;
    for (auto& t : terms_) acc += t.coefficient * kernel_derivative(h, z, t.node, t.alpha);
    return acc;
}

complex evaluate_span(const SpanElement& s, const Point& z) { return s.evaluate(z); }

nlohmann::json SpanElement::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : terms_) {
        nlohmann::json node = nlohmann::json::array();
        for (auto& c : t.node) node.push_back({c.real(), c.imag()});
        terms.push_back({{"node", node},
                         {"alpha", t.alpha.e},
                         {"coefficient", {t.coefficient.real(), t.coefficient.imag()}}});
    }
    return {{"domain", domain_->to_json()}, {"terms", terms}};
}

SpanElement constant_span_element(DomainPtr domain, complex value) {
    const int n = domain->dimension();
    Point center = domain->reference_center();
    KernelHandle h{domain};
    complex k0 = kernel_eval(h, center, center);
    return SpanElement(domain, {SpanTerm{center, MultiIndex::zeros(n), value / k0}});
}

SpanElement product_span(const std::vector<SpanElement>& factors) {
    if (factors.empty()) fail(ErrorCode::SpecParseError, "product_span: no factors");
    std::vector<DomainPtr> doms;
    for (auto& f : factors) {
        if (!f.domain()->is_planar())
            fail(ErrorCode::DimensionMismatch, "product_span: factors must live on planar domains");
        doms.push_back(f.domain());
    }
    DomainPtr prod = Domain::product(doms);
    const int n = static_cast<int>(factors.size());

    std::vector<SpanTerm> terms;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        SpanTerm t;
        t.node.resize(static_cast<std::size_t>(n));
        t.alpha = MultiIndex::zeros(n);
        t.coefficient = 1.0;
        for (int i = 0; i < n; ++i) {
            const SpanTerm& ft = factors[static_cast<std::size_t>(i)].terms()[idx[static_cast<std::size_t>(i)]];
            t.node[static_cast<std::size_t>(i)] = ft.node[0];
            t.alpha.e[static_cast<std::size_t>(i)] = ft.alpha.e[0];
            t.coefficient *= ft.coefficient;
        }
        terms.push_back(std::move(t));
        int carry = n - 1;
        while (carry >= 0) {
            if (++idx[static_cast<std::size_t>(carry)] <
                factors[static_cast<std::size_t>(carry)].terms().size())
                break;
            idx[static_cast<std::size_t>(carry)] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    return SpanElement(std::move(prod), std::move(terms));
}

// ---------------------------------------------------------------------------
// membership

const char* verdict_name(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::InSpan: return "in_span";
        case MembershipVerdict::NotInSpan: return "not_in_span";
        case MembershipVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json MembershipTrace::to_json() const {
    nlohmann::json lv = nlohmann::json::array();
    for (auto& l : levels)
        lv.push_back({{"max_order", l.max_order},
                      {"nodes", l.node_count},
                      {"basis_size", l.basis_size},
                      {"residual", l.residual},
                      {"condition", l.condition},
                      {"skipped", l.skipped}});
    return {{"levels", lv},
            {"verdict", verdict_name(verdict)},
            {"best_residual", best_residual},
            {"accept_tol", config.accept_tol},
            {"reject_floor", config.reject_floor}};
}

std::vector<Point> membership_node_grid(const Domain& domain, int per_axis) {
    if (per_axis < 1) fail(ErrorCode::SpecParseError, "node grid needs per_axis >= 1");
    const int n = domain.dimension();
    const Point center = domain.reference_center();
    const double scale = 0.5 * domain.inradius();
    std::vector<double> offsets;
    for (int j = 0; j < per_axis; ++j)
        offsets.push_back(per_axis == 1 ? 0.0 : -scale + 2.0 * scale * j / (per_axis - 1));

    std::vector<Point> grid;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        Point p = center;
        for (int i = 0; i < n; ++i) p[i] += offsets[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        grid.push_back(std::move(p));
        int carry = n - 1;
        while (carry >= 0) {
            if (++idx[static_cast<std::size_t>(carry)] < per_axis) break;
            idx[static_cast<std::size_t>(carry)] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    return grid;
}

MembershipTrace membership_residual(const Expr& candidate, DomainPtr domain,
                                    const std::vector<Point>& node_grid, int max_order,
                                    const MembershipConfig& config) {
    const int n = domain->dimension();
    if (candidate.nvars() != n)
        fail(ErrorCode::DimensionMismatch, "membership: candidate variables != domain dimension");
    for (auto& node : node_grid)
        if (!contains(*domain, node)) fail(ErrorCode::OutsideDomain, "membership node outside domain");

    // column descriptors, nested by derivative order
    struct Column {
        Point node;
        MultiIndex alpha;
    };
    std::vector<Column> columns;
    std::vector<int> level_end; // columns in levels 0..m
    auto all_alphas = enumerate_multi_indices(n, max_order);
    for (int m = 0; m <= max_order; ++m) {
        for (auto& alpha : all_alphas)
            if (alpha.degree() == m)
                for (auto& node : node_grid) columns.push_back({node, alpha});
        level_end.push_back(static_cast<int>(columns.size()));
    }
    const int total_cols = static_cast<int>(columns.size());

    // one fixed design shared by all levels keeps residuals monotone
    const int rows = config.design_factor * total_cols;
    auto design = sample_interior(*domain, SampleStrategy::QuasiRandom, rows, config.seed);

    Eigen::MatrixXcd A(rows, total_cols);
    {
        KernelHandle h{domain};
        std::vector<Expr> col_exprs(static_cast<std::size_t>(total_cols));
        parallel_blocks(static_cast<std::size_t>(total_cols), 64, [&](int, std::size_t lo, std::size_t hi) {
            for (std::size_t c = lo; c < hi; ++c)
                col_exprs[c] = kernel_z_expr(h, columns[c].node, columns[c].alpha);
        });
        parallel_blocks(static_cast<std::size_t>(total_cols), 64, [&](int, std::size_t lo, std::size_t hi) {
            for (std::size_t c = lo; c < hi; ++c)
                for (int r = 0; r < rows; ++r)
                    A(r, static_cast<Eigen::Index>(c)) = col_exprs[c].eval(design[static_cast<std::size_t>(r)]);
        });
    }
    Eigen::VectorXcd b(rows);
    for (int r = 0; r < rows; ++r) b(r) = candidate.eval(design[static_cast<std::size_t>(r)]);
    const double bnorm = b.norm();

    // column scaling (not a regularization; the fit is unchanged)
    Eigen::VectorXd colscale(total_cols);
    for (int c = 0; c < total_cols; ++c) {
        double s = A.col(c).norm();
        colscale(c) = s > 0.0 ? s : 1.0;
        A.col(c) /= colscale(c);
    }

    MembershipTrace trace;
    trace.config = config;
    trace.best_residual = 1.0;

    if (bnorm == 0.0) { // the zero function is trivially in the span
        trace.verdict = MembershipVerdict::InSpan;
        trace.best_residual = 0.0;
        trace.fitted = SpanElement(domain, {});
        return trace;
    }

    std::optional<SpanElement> best_fit;
    for (int m = 0; m <= max_order; ++m) {
        const int k = level_end[static_cast<std::size_t>(m)];
        MembershipLevel level;
        level.max_order = m;
        level.node_count = static_cast<int>(node_grid.size());
        level.basis_size = k;

        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A.leftCols(k));
        Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs().head(k);
        double dmax = diag.maxCoeff(), dmin = diag.minCoeff();
        level.condition = dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity();
        if (level.condition > config.condition_cap) {
            level.skipped = true;
            trace.levels.push_back(level);
            continue;
        }
        Eigen::VectorXcd x = qr.solve(b);
        level.residual = (A.leftCols(k) * x - b).norm() / bnorm;
        trace.levels.push_back(level);

        if (level.residual < trace.best_residual || !best_fit) {
            trace.best_residual = level.residual;
            std::vector<SpanTerm> terms;
            for (int c = 0; c < k; ++c)
                terms.push_back({columns[static_cast<std::size_t>(c)].node,
                                 columns[static_cast<std::size_t>(c)].alpha, x(c) / colscale(c)});
            best_fit = SpanElement(domain, std::move(terms));
        }
        if (level.residual < config.accept_tol && trace.verdict != MembershipVerdict::InSpan) {
            trace.verdict = MembershipVerdict::InSpan;
            trace.fitted = best_fit;
        }
    }
    if (trace.verdict != MembershipVerdict::InSpan) {
        trace.fitted = best_fit;
        // plateau above the floor across the last three computed levels
        std::vector<double> computed;
        for (auto& l : trace.levels)
            if (!l.skipped) computed.push_back(l.residual);
        if (computed.size() >= 3 &&
            std::all_of(computed.end() - 3, computed.end(),
                        [&](double r) { return r > config.reject_floor; })) {
            trace.verdict = MembershipVerdict::NotInSpan;
        }
    }
    return trace;
}

} // namespace qd
