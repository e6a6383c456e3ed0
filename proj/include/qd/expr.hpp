///////////////////////////////////////////////////////////////////////////////
// expr.hpp
//
// closed-form holomorphic scalar expressions: the grammar is closed under
// +, -, *, /, integer powers, exp, composition, and definite path-integration
// along the last coordinate (straight segment, fixed Gauss rule). Expressions
// evaluate pointwise and over the jet algebra, and differentiate symbolically.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qd/core.hpp"
#include "qd/jet.hpp"

#include "json.hpp"

namespace qd {

class Expr {
  public:
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Exp, Pow, Compose, SpanIntegral };

    Expr() = default;

    static Expr constant(complex c, int nvars);
    static Expr var(int index, int nvars);
    static Expr exp_of(const Expr& a);
    static Expr int_pow(const Expr& a, int k);
    /// outer over m variables composed with m inner expressions over n variables
    static Expr compose(const Expr& outer, const std::vector<Expr>& inner);
    /// integral of g(z', tau) dtau from gamma(z') to z_n; g has n variables,
    /// gamma n-1. Evaluated with a fixed Gauss rule along the straight segment.
    static Expr span_integral(const Expr& g, const Expr& gamma, int gauss_order = 32);

    /// univariate polynomial c0 + c1 z + ... over nvars variables in z_{var}
    static Expr polynomial(const std::vector<complex>& coeffs, int nvars = 1, int var = 0);

    bool valid() const { return node_ != nullptr; }
    int nvars() const;
    Kind kind() const;

    complex eval(const Point& z) const;
    /// Taylor jet at the center through the given order (jet_lift)
    Jet lift(const Point& center, int order) const;
    /// evaluate over the jet algebra with arbitrary jet images of variables
    Jet eval_jets(const std::vector<Jet>& vars) const;

    /// symbolic d/dz_{var}
    Expr derivative(int var) const;

    /// expression with all constants conjugated (so conj(f(z)) = fbar(conj z))
    Expr conjugated() const;

    std::string to_string() const;

    /// scenario-grammar JSON for the basic operators; Compose/SpanIntegral
    /// nodes are internal-only and cannot be serialized
    nlohmann::json to_json() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);

    // node tree is immutable and shared; definition lives in expr.cpp
    struct Node;
    const Node& node() const { return *node_; }
    static Expr from_node(std::shared_ptr<const Node> n) { return Expr(std::move(n)); }

  private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, complex c);
Expr operator*(const Expr& a, complex c);
Expr operator*(complex c, const Expr& a);
Expr operator-(complex c, const Expr& a);

/// jet of the expression at the center through order N (Taylor coefficients)
Jet jet_lift(const Expr& f, const Point& center, int order);

/// parse the scenario-file expression format, e.g. {"exp": {"add": ["z1","z2"]}}
Expr parse_expr(const nlohmann::json& spec, int nvars);

} // namespace qd
