///////////////////////////////////////////////////////////////////////////////
// jet.hpp
//
// truncated multivariate power series (jets). A jet stores the Taylor
// coefficients of a holomorphic function about its center through a fixed
// order; products, reciprocals, exp and composition all act on the truncated
// algebra. coefficient(alpha) is d^alpha f / alpha!.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include "qd/core.hpp"
#include "qd/multi_index.hpp"

namespace qd {

class Jet {
  public:
    Jet(Point center, int order);

    static Jet constant(Point center, int order, complex value);
    /// coordinate jet: value center[var] + unit linear term in variable var
    static Jet variable(Point center, int order, int var);

    int dim() const { return static_cast<int>(center_.size()); }
    int order() const { return order_; }
    const Point& center() const { return center_; }
    const SimplexTable& table() const { return *table_; }

    complex coefficient(const MultiIndex& alpha) const;
    complex& coeff_at(int pos) { return coeff_[pos]; }
    complex coeff_at(int pos) const { return coeff_[pos]; }
    complex value() const { return coeff_[0]; } // constant term

    Jet truncated(int new_order) const;

  private:
    Point center_;
    int order_;
    std::shared_ptr<const SimplexTable> table_;
    std::vector<complex> coeff_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator+(const Jet& a, complex c);
Jet operator-(const Jet& a, complex c);
Jet operator*(const Jet& a, complex c);
Jet operator*(complex c, const Jet& a);

/// Cauchy product truncated to min(orders)
Jet jet_multiply(const Jet& a, const Jet& b);

/// 1/a; requires a nonvanishing constant term
Jet jet_reciprocal(const Jet& a);

Jet jet_divide(const Jet& a, const Jet& b);

Jet jet_exp(const Jet& a);

/// a^k for integer k >= 0
Jet jet_pow(const Jet& a, int k);

/// composition: outer is a jet at f(c) in m variables, inner supplies one jet
/// at c per outer variable; the inner constant terms must equal the outer
/// center (tolerance 1e-12). Horner-style evaluation over the truncated
/// algebra.
Jet jet_compose(const Jet& outer, const std::vector<Jet>& inner);

/// alpha! * coefficient(alpha) = d^alpha f at the center
complex derivative_at(const Jet& j, const MultiIndex& alpha);

} // namespace qd
