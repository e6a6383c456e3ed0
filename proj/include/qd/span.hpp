///////////////////////////////////////////////////////////////////////////////
// span.hpp
//
// Bergman-span elements (finite combinations of antiholomorphic kernel
// derivatives at nodes) as first-class certificate objects, product
// composition across planar factors, and the nested least-squares membership
// test.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <mutex>
#include <optional>

#include "qd/kernels.hpp"

#include "json.hpp"

namespace qd {

struct SpanTerm {
    Point node;
    MultiIndex alpha;
    complex coefficient;
};

/// sum_j coefficient_j * d^alpha/d wbar^alpha K(z, w)|_{w = node_j}
class SpanElement {
  public:
    SpanElement(DomainPtr domain, std::vector<SpanTerm> terms);

    const DomainPtr& domain() const { return domain_; }
    const std::vector<SpanTerm>& terms() const { return terms_; }
    int max_order() const;

    complex evaluate(const Point& z) const;
    /// the element as a closed-form expression in z (cached)
    Expr as_expr() const;

    nlohmann::json to_json() const;

  private:
    DomainPtr domain_;
    std::vector<SpanTerm> terms_; // sorted by (node, alpha), merged
    struct Cache {
        std::mutex mtx;
        std::optional<Expr> expr;
    };
    std::shared_ptr<Cache> cache_;
};

complex evaluate_span(const SpanElement& s, const Point& z);

/// constant value v as pi^n r^... scaled kernel term at the domain center
SpanElement constant_span_element(DomainPtr domain, complex value = 1.0);

/// element on the product domain whose evaluation is the product of the
/// factor evaluations; nodes are the cross product of factor nodes
SpanElement product_span(const std::vector<SpanElement>& factors);

// ---------------------------------------------------------------------------
// membership

enum class MembershipVerdict { InSpan, NotInSpan, Inconclusive };

const char* verdict_name(MembershipVerdict v);

struct MembershipLevel {
    int max_order = 0;
    int node_count = 0;
    int basis_size = 0;
    double residual = 0.0;       // relative least-squares residual
    double condition = 0.0;      // diagonal-ratio estimate from the pivoted QR
    bool skipped = false;        // condition estimate beyond the cap
};

struct MembershipConfig {
    int design_factor = 10;      // sample points per basis column at the top level
    std::uint64_t seed = 17;
    double accept_tol = 1e-6;
    double reject_floor = 1e-3;
    double condition_cap = 1e12;
};

struct MembershipTrace {
    std::vector<MembershipLevel> levels;
    MembershipVerdict verdict = MembershipVerdict::Inconclusive;
    std::optional<SpanElement> fitted; // best fit at the accepting (or last) level
    double best_residual = 0.0;
    MembershipConfig config;

    nlohmann::json to_json() const;
};

/// default node lattice: per complex axis, `per_axis` points evenly spaced on
/// the real segment of half-width 0.5 * inradius about the center
std::vector<Point> membership_node_grid(const Domain& domain, int per_axis);

/// nested least-squares membership test of `candidate` against kernel
/// derivatives of orders 0..max_order at the node grid
MembershipTrace membership_residual(const Expr& candidate, DomainPtr domain,
                                    const std::vector<Point>& node_grid, int max_order,
                                    const MembershipConfig& config = {});

} // namespace qd
