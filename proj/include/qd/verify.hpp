///////////////////////////////////////////////////////////////////////////////
// verify.hpp
//
// numerical integration over domains (tensor Gauss in polar coordinates,
// quasi-Monte-Carlo with geometric rejection) and residual verification of
// quadrature identities and QDP claims.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <string>

#include "qd/transport.hpp"

namespace qd {

struct IntegrationScheme {
    enum class Kind { TensorGauss, Qmc } kind = Kind::TensorGauss;
    // tensor-gauss: per planar factor (and per ball angle/radius pair)
    int radial_order = 64;
    int angular_order = 64;
    // qmc
    long samples = 1'000'000;
    std::uint64_t seed = 1;

    static IntegrationScheme tensor(int radial, int angular) {
        IntegrationScheme s;
        s.kind = Kind::TensorGauss;
        s.radial_order = radial;
        s.angular_order = angular;
        return s;
    }
    static IntegrationScheme qmc(long samples, std::uint64_t seed = 1) {
        IntegrationScheme s;
        s.kind = Kind::Qmc;
        s.samples = samples;
        s.seed = seed;
        return s;
    }

    nlohmann::json to_json() const;
};

/// nodes/weights materialized on a concrete domain. For image domains the
/// tensor rule lives on the base with |u|^2 weights (change of variables);
/// the QMC rule samples the image directly, rejecting by inverse membership.
struct MaterializedRule {
    std::vector<Point> nodes;
    std::vector<double> weights;
    double total_weight = 0.0;
    std::string description;
};

MaterializedRule materialize_rule(const Domain& domain, const IntegrationScheme& scheme);

complex integrate(const Domain& domain, const Expr& f, const IntegrationScheme& scheme);
std::vector<complex> integrate_many(const Domain& domain, const std::vector<Expr>& fs,
                                    const IntegrationScheme& scheme);
complex integrate_fn(const Domain& domain, const std::function<complex(const Point&)>& f,
                     const IntegrationScheme& scheme);

// ---------------------------------------------------------------------------
// verification reports

struct TestResidual {
    std::string label;
    complex integral;
    complex node_sum;
    double abs_residual = 0.0;
    double rel_residual = 0.0; // equals abs when the integral is ~0
};

struct VerificationReport {
    std::string id;
    std::vector<TestResidual> tests;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    nlohmann::json scheme_meta;

    nlohmann::json to_json() const;
};

/// all monomials z^beta with |beta| <= max_degree as expressions
std::vector<Expr> monomial_tests(int nvars, int max_degree);
std::string monomial_label(const MultiIndex& beta);

struct VerifyOptions {
    int max_degree = 6;                 // monomial tests up to this degree
    std::vector<Expr> explicit_tests;   // used instead when non-empty
    double tolerance = 1e-8;
    IntegrationScheme scheme;
};

VerificationReport verify_identity(const QuadratureIdentity& q, const VerifyOptions& opts);

/// fused reproducing-property check: max residual of
/// integral_Omega p(w) K(z, w) dw  vs  p(z) over eval points and monomials
struct ReproducingCheck {
    double max_residual = 0.0;
    std::string worst_label;
};
ReproducingCheck reproducing_residuals(const KernelHandle& h, const std::vector<Point>& eval_points,
                                       int max_degree, const IntegrationScheme& scheme);

// ---------------------------------------------------------------------------
// QDP criterion

struct QdpRow {
    MultiIndex alpha;
    MembershipVerdict verdict;
    double best_residual;
};

struct QdpTable {
    std::vector<QdpRow> rows;
    std::vector<MembershipTrace> traces;
    bool all_in_span = true;

    nlohmann::json to_json() const;
};

/// membership of u * f^alpha for every |alpha| <= max_degree
QdpTable qdp_check(const HolomorphicMap& f, DomainPtr omega, int max_degree,
                   const std::vector<Point>& node_grid, int membership_order,
                   const MembershipConfig& config = {});

} // namespace qd
