#include "qd/transport.hpp"

#include <algorithm>
#include <cmath>

#include "qd/errors.hpp"

namespace qd {

namespace {

bool point_near(const Point& a, const Point& b) { return dist(a, b) < 1e-12; }

std::vector<QITerm> normalize_qi_terms(std::vector<QITerm> terms, int n) {
    for (auto& t : terms)
        if (static_cast<int>(t.node.size()) != n || t.alpha.dim() != n)
            fail(ErrorCode::DimensionMismatch, "identity term dimension mismatch");
    std::sort(terms.begin(), terms.end(), [](const QITerm& a, const QITerm& b) {
        for (std::size_t i = 0; i < a.node.size(); ++i) {
            if (a.node[i].real() != b.node[i].real()) return a.node[i].real() < b.node[i].real();
            if (a.node[i].imag() != b.node[i].imag()) return a.node[i].imag() < b.node[i].imag();
        }
        return a.alpha < b.alpha;
    });
    std::vector<QITerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && point_near(merged.back().node, t.node) && merged.back().alpha == t.alpha) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const QITerm& t) { return std::abs(t.coefficient) < 1e-300; }),
                 merged.end());
    return merged;
}

} // namespace

QuadratureIdentity::QuadratureIdentity(DomainPtr domain, std::vector<QITerm> terms)
    : domain_(std::move(domain)) {
    if (!domain_) fail(ErrorCode::SpecParseError, "identity needs a domain");
    terms_ = normalize_qi_terms(std::move(terms), domain_->dimension());
}

int QuadratureIdentity::max_order() const {
    int m = 0;
    for (auto& t : terms_) m = std::max(m, t.alpha.degree());
    return m;
}

complex QuadratureIdentity::apply(const Expr& g) const {
    complex acc = 0.0;
    std::size_t i = 0;
    while (i < terms_.size()) {
        std::size_t j = i;
        int order = 0;
        while (j < terms_.size() && point_near(terms_[j].node, terms_[i].node)) {
            order = std::max(order, terms_[j].alpha.degree());
            ++j;
        }
        Jet jet = g.lift(terms_[i].node, order);
        for (std::size_t k = i; k < j; ++k)
            acc += terms_[k].coefficient * derivative_at(jet, terms_[k].alpha);
        i = j;
    }
    return acc;
}

nlohmann::json QuadratureIdentity::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : terms_) {
        nlohmann::json node = nlohmann::json::array();
        for (auto& c : t.node) node.push_back({c.real(), c.imag()});
        terms.push_back({{"node", node},
                         {"alpha", t.alpha.e},
                         {"coefficient", {t.coefficient.real(), t.coefficient.imag()}}});
    }
    nlohmann::json j = {{"domain", domain_->to_json()}, {"terms", terms}};
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

Expr lambda1(const Expr& g, const HolomorphicMap& f) {
    if (g.nvars() != f.dim_out()) fail(ErrorCode::DimensionMismatch, "lambda1: g variables != map output");
    return f.jacobian_expr() * Expr::compose(g, f.components());
}

// ---------------------------------------------------------------------------
// pushforward

namespace {

// T coefficients at one node: d^alpha (u * h o f)(omega) = sum_beta
// T(alpha, beta) d^beta h(f(omega)); computed by substituting formal Taylor
// data of h at f(omega) and reading coefficients off jets of u * (f - w)^beta.
struct NodeTransfer {
    Point image_node;
    // T[alpha_pos][beta_pos] over the simplex |.| <= N
    std::vector<std::vector<complex>> T;
    std::shared_ptr<const SimplexTable> table;
};

NodeTransfer node_transfer(const HolomorphicMap& f, const Expr& u_expr, const Point& omega, int order) {
    NodeTransfer nt;
    const int n = f.dim_in();
    nt.table = SimplexTable::get(n, order);
    nt.image_node = f.evaluate(omega);

    Jet u_jet = u_expr.lift(omega, order);
    std::vector<Jet> f_shift;
    for (int i = 0; i < f.dim_out(); ++i)
        f_shift.push_back(f.component(i).lift(omega, order) - nt.image_node[static_cast<std::size_t>(i)]);

    const int m = nt.table->size();
    nt.T.assign(static_cast<std::size_t>(m), std::vector<complex>(static_cast<std::size_t>(m), complex(0.0)));
    // monomials (f - w)^beta along the graded enumeration
    std::vector<Jet> monomial;
    monomial.reserve(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) {
        const MultiIndex& beta = nt.table->at(b);
        if (beta.degree() == 0) {
            monomial.push_back(Jet::constant(omega, order, 1.0));
        } else {
            int v = 0;
            while (beta.e[static_cast<std::size_t>(v)] == 0) ++v;
            MultiIndex prev = beta;
            prev.e[static_cast<std::size_t>(v)] -= 1;
            monomial.push_back(jet_multiply(monomial[static_cast<std::size_t>(nt.table->index_of(prev))],
                                            f_shift[static_cast<std::size_t>(v)]));
        }
        Jet contrib = jet_multiply(u_jet, monomial.back());
        const double beta_fact = beta.factorial();
        for (int a = 0; a < m; ++a) {
            const MultiIndex& alpha = nt.table->at(a);
            nt.T[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                contrib.coeff_at(a) * alpha.factorial() / beta_fact;
        }
    }
    return nt;
}

} // namespace

SpanElement pushforward_span(const SpanElement& s, MapPtr f, int jet_order, DomainPtr target) {
    if (!f) fail(ErrorCode::SpecParseError, "pushforward needs a map");
    if (jet_order < s.max_order())
        fail(ErrorCode::OrderOverflow, "jet_order below the highest derivative order in the element");
    const int n = s.domain()->dimension();
    if (f->dim_in() != n) fail(ErrorCode::DimensionMismatch, "pushforward: map input dimension");

    Expr u_expr = f->jacobian_expr();
    DomainPtr V = target ? target : Domain::image(s.domain(), f);

    std::vector<SpanTerm> out;
    std::size_t i = 0;
    const auto& terms = s.terms();
    while (i < terms.size()) {
        std::size_t j = i;
        while (j < terms.size() && point_near(terms[j].node, terms[i].node)) ++j;

        const Point& omega = terms[i].node;
        complex u_at = jacobian_determinant(*f, omega);
        if (std::abs(u_at) < 1e-12)
            fail(ErrorCode::SingularJacobianAtNode, "Jacobian determinant vanishes at a node");
        NodeTransfer nt = node_transfer(*f, u_expr, omega, jet_order);

        // C_{beta} = conj( sum_alpha conj(c_alpha) T(alpha, beta) )
        const int m = nt.table->size();
        std::vector<complex> C(static_cast<std::size_t>(m), complex(0.0));
        for (std::size_t k = i; k < j; ++k) {
            int a = nt.table->index_of(terms[k].alpha);
            for (int b = 0; b < m; ++b)
                C[static_cast<std::size_t>(b)] +=
                    std::conj(std::conj(terms[k].coefficient) *
                              nt.T[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
        for (int b = 0; b < m; ++b)
            if (std::abs(C[static_cast<std::size_t>(b)]) > 0.0)
                out.push_back({nt.image_node, nt.table->at(b), C[static_cast<std::size_t>(b)]});
        i = j;
    }
    return SpanElement(std::move(V), std::move(out));
}

QuadratureIdentity extract_quadrature_identity(MapPtr f, const SpanElement& u_repr, int jet_order,
                                               DomainPtr target) {
    if (!f) fail(ErrorCode::SpecParseError, "extract needs a map");
    const DomainPtr& omega_dom = u_repr.domain();

    // validation: the representation must match the Jacobian determinant
    auto grid = sample_interior(*omega_dom, SampleStrategy::QuasiRandom, 40, 3);
    Expr s_expr = u_repr.as_expr();
    for (auto& z : grid) {
        complex su = s_expr.eval(z);
        complex ju = jacobian_determinant(*f, z);
        if (std::abs(su - ju) > 1e-8 * std::max(1.0, std::abs(ju)))
            fail(ErrorCode::URepresentationMismatch,
                 "span representation disagrees with the Jacobian determinant");
    }

    SpanElement pushed = pushforward_span(u_repr, f, jet_order, target);
    std::vector<QITerm> terms;
    for (auto& t : pushed.terms()) terms.push_back({t.node, t.alpha, std::conj(t.coefficient)});
    QuadratureIdentity qi(pushed.domain(), std::move(terms));
    qi.provenance = "pushforward of Jacobian representation (" +
                    std::to_string(u_repr.terms().size()) + " source terms, jet order " +
                    std::to_string(jet_order) + ")";
    return qi;
}

} // namespace qd
