///////////////////////////////////////////////////////////////////////////////
// homotopy.hpp
//
// homotopies through quadrature domains: dilation homotopy, univalence radius
// estimates, the piecewise-linear rescaling schedule, straight-line
// homotopies with the chord-arc epsilon criterion, and the convex-domain
// deformation built from a span element close to 1.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include "qd/verify.hpp"

namespace qd {

/// phi_t(z) = f(t z)/t for t != 0, phi_0(z) = f'(0) z; requires f(0) = 0
HolomorphicMap dilation_homotopy(const HolomorphicMap& f, double t);

/// (1-t) f + t g componentwise
HolomorphicMap straight_line_homotopy(const HolomorphicMap& f, const HolomorphicMap& g, double t);

/// largest rho <= 1 (within bisection_tol) whose disc passes the sampled
/// injectivity scan; an estimate of the univalence radius
double univalence_radius(const HolomorphicMap& f, int resolution = 300, double bisection_tol = 1e-3);

/// the piecewise-linear rescaling: 1 near the endpoints, min(m,2)/2 on
/// [t1, t2], linear ramps between
struct RescalingSchedule {
    double t1 = 0.0, t2 = 1.0, m_eff = 2.0;
    double eval(double t) const;
};

RescalingSchedule rescaling_schedule(const std::vector<std::pair<double, double>>& r_samples, double t1,
                                     double t2, double m);

struct HomotopySchedule {
    std::vector<double> t_samples;
    std::vector<double> r_hat;
    double t1 = 0.0, t2 = 1.0, m = 0.0;
    RescalingSchedule k;
    double epsilon = 0.0; // m_hat / M when computed
};

/// r(t) estimates for the straight-line family between f and g, the t1/t2
/// plateau selection, and the schedule
HomotopySchedule build_straight_line_schedule(const HolomorphicMap& f, const HolomorphicMap& g,
                                              int t_count = 21, int resolution = 200,
                                              double bisection_tol = 1e-2);

struct EpsilonCriterion {
    double m_hat = 0.0;  // divided-difference minimum
    double chord_arc = 1.0;
    double epsilon = 0.0; // m_hat / M
};

/// Lemma-style criterion: perturbations with sup |g' - f'| below epsilon keep
/// the sampled injectivity; M is pi/2 for circle domains, 1 for convex discs
EpsilonCriterion epsilon_criterion(const HolomorphicMap& f, const Domain& domain);

// ---------------------------------------------------------------------------
// dilation trace

struct DilationTraceEntry {
    double t = 0.0;
    QuadratureIdentity identity;
    VerificationReport report;
    double membership_residual = 0.0;
};

struct DilationTraceOptions {
    int node_per_axis = 1;
    int membership_order = 5;
    int verify_degree = 6;
    double verify_tolerance = 1e-5;
    IntegrationScheme scheme = IntegrationScheme::tensor(48, 48);
};

struct DilationTrace {
    std::vector<DilationTraceEntry> entries;
    double max_coefficient_jump = 0.0; // between adjacent t samples
    bool all_pass = true;
};

/// quadrature identities of phi_t(D) along the dilation homotopy of a
/// rational univalent map fixing the origin
DilationTrace dilation_qd_trace(const HolomorphicMap& f, const std::vector<double>& t_samples,
                                const DilationTraceOptions& options = {});

// ---------------------------------------------------------------------------
// convex deformation

struct DeformationRecipe {
    DomainPtr base;        // product/circular domain containing 0
    Expr gamma;            // holomorphic on the projection (n-1 variables)
    SpanElement g;         // perturbed Jacobian target, ||g - 1||_inf < 1
};

struct DeformResult {
    MapPtr f;
    QuadratureIdentity identity;
    VerificationReport report;
    InjectivityReport injectivity;
    double jacobian_residual = 0.0; // max |det Jf - g| over the check grid
    double closeness = 0.0;         // sup distance to the identity on the sample
};

struct DeformOptions {
    int jacobian_grid = 500;
    int scan_resolution = 200;
    int verify_degree = 6;
    double verify_tolerance = 1e-5;
    IntegrationScheme scheme = IntegrationScheme::tensor(24, 24);
};

/// f(z', z_n) = (z', U(z', z_n) + gamma(z')) with U the segment integral of g;
/// the complex Jacobian determinant of f is g, so the image is a quadrature
/// domain with the transported identity
DeformResult deform_convex(const DeformationRecipe& recipe, const DeformOptions& options = {});

} // namespace qd
