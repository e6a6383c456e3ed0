///////////////////////////////////////////////////////////////////////////////
// transport.hpp
//
// transporting span elements and quadrature identities through
// biholomorphisms. The pushforward expands derivatives of u * (h o f) at each
// node as a linear form over the derivatives of h at the image node using jet
// arithmetic, collecting the new coefficients exactly.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include "qd/span.hpp"

namespace qd {

struct QITerm {
    Point node;
    MultiIndex alpha;
    complex coefficient;
};

/// integral_V g = sum coefficient * d^alpha g(node)
class QuadratureIdentity {
  public:
    QuadratureIdentity(DomainPtr domain, std::vector<QITerm> terms);

    const DomainPtr& domain() const { return domain_; }
    const std::vector<QITerm>& terms() const { return terms_; }
    int max_order() const;

    /// the right-hand side sum for a test function
    complex apply(const Expr& g) const;

    nlohmann::json to_json() const;

    std::string provenance; // free-form trace of how the identity was derived

  private:
    DomainPtr domain_;
    std::vector<QITerm> terms_;
};

/// Lambda_1(g) = u * (g o f) as an expression on the source domain
Expr lambda1(const Expr& g, const HolomorphicMap& f);

/// span element on f(domain of s) representing the same linear functional
/// through the unitary correspondence; jet_order must cover max |alpha| in s
SpanElement pushforward_span(const SpanElement& s, MapPtr f, int jet_order,
                             DomainPtr target = nullptr);

/// quadrature identity of f(Omega) from a span representation of the Jacobian
/// determinant; validates u_repr against the Jacobian on a sample grid first
QuadratureIdentity extract_quadrature_identity(MapPtr f, const SpanElement& u_repr, int jet_order,
                                               DomainPtr target = nullptr);

} // namespace qd
