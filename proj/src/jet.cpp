#include "qd/jet.hpp"

#include <algorithm>

#include "qd/errors.hpp"

namespace qd {

Jet::Jet(Point center, int order)
    : center_(std::move(center)),
      order_(order),
      table_(SimplexTable::get(static_cast<int>(center_.size()), order)),
      coeff_(table_->size(), complex(0.0)) {}

Jet Jet::constant(Point center, int order, complex value) {
    Jet j(std::move(center), order);
    j.coeff_[0] = value;
    return j;
}

Jet Jet::variable(Point center, int order, int var) {
    Jet j(center, order);
    j.coeff_[0] = center[var];
    if (order >= 1) {
        int pos = j.table_->index_of(MultiIndex::unit(j.dim(), var));
        j.coeff_[pos] = 1.0;
    }
    return j;
}

complex Jet::coefficient(const MultiIndex& alpha) const {
    int pos = table_->index_of(alpha);
    if (pos < 0) fail(ErrorCode::OrderExceeded, "coefficient beyond jet order");
    return coeff_[pos];
}

Jet Jet::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    Jet r(center_, new_order);
    for (int i = 0; i < r.table().size(); ++i) r.coeff_[i] = coeff_[table_->index_of(r.table().at(i))];
    return r;
}

static void check_binary(const Jet& a, const Jet& b) {
    if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "jet dimensions differ");
    for (int i = 0; i < a.dim(); ++i)
        if (std::abs(a.center()[i] - b.center()[i]) > 1e-12)
            fail(ErrorCode::CenterMismatch, "jet centers differ");
}

Jet operator+(const Jet& a, const Jet& b) {
    check_binary(a, b);
    int order = std::min(a.order(), b.order());
    Jet r = a.truncated(order);
    Jet bt = b.truncated(order);
    for (int i = 0; i < r.table().size(); ++i) r.coeff_at(i) += bt.coeff_at(i);
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    check_binary(a, b);
    int order = std::min(a.order(), b.order());
    Jet r = a.truncated(order);
    Jet bt = b.truncated(order);
    for (int i = 0; i < r.table().size(); ++i) r.coeff_at(i) -= bt.coeff_at(i);
    return r;
}

Jet operator-(const Jet& a) {
    Jet r = a;
    for (int i = 0; i < r.table().size(); ++i) r.coeff_at(i) = -r.coeff_at(i);
    return r;
}

Jet operator+(const Jet& a, complex c) {
    Jet r = a;
    r.coeff_at(0) += c;
    return r;
}

Jet operator-(const Jet& a, complex c) { return a + (-c); }

Jet operator*(const Jet& a, complex c) {
    Jet r = a;
    for (int i = 0; i < r.table().size(); ++i) r.coeff_at(i) *= c;
    return r;
}

Jet operator*(complex c, const Jet& a) { return a * c; }

Jet jet_multiply(const Jet& a, const Jet& b) {
    check_binary(a, b);
    int order = std::min(a.order(), b.order());
    Jet at = a.truncated(order);
    Jet bt = b.truncated(order);
    Jet r(at.center(), order);
    const SimplexTable& tab = at.table();
    const int m = tab.size();
    for (int i = 0; i < m; ++i) {
        complex ai = at.coeff_at(i);
        if (ai == complex(0.0)) continue;
        for (int j = 0; j < m; ++j) {
            int k = tab.sum_index(i, j);
            if (k < 0) continue;
            r.coeff_at(k) += ai * bt.coeff_at(j);
        }
    }
    return r;
}

Jet jet_reciprocal(const Jet& a) {
    complex a0 = a.value();
    if (std::abs(a0) < 1e-300) fail(ErrorCode::PoleAtCenter, "reciprocal of jet with zero constant term");
    // 1/a = (1/a0) sum (-q)^k with q = a/a0 - 1 (no constant term)
    Jet q = a * (1.0 / a0) - complex(1.0);
    Jet r = Jet::constant(a.center(), a.order(), 1.0);
    Jet term = Jet::constant(a.center(), a.order(), 1.0);
    for (int k = 1; k <= a.order(); ++k) {
        term = jet_multiply(term, q);
        r = (k % 2 == 0) ? (r + term) : (r - term);
    }
    return r * (1.0 / a0);
}

Jet jet_divide(const Jet& a, const Jet& b) { return jet_multiply(a, jet_reciprocal(b)); }

Jet jet_exp(const Jet& a) {
    complex a0 = a.value();
    Jet t = a - a0; // nilpotent part
    Jet r = Jet::constant(a.center(), a.order(), 1.0);
    Jet term = Jet::constant(a.center(), a.order(), 1.0);
    double fact = 1.0;
    for (int k = 1; k <= a.order(); ++k) {
        term = jet_multiply(term, t);
        fact *= k;
        r = r + term * (1.0 / fact);
    }
    return r * std::exp(a0);
}

Jet jet_pow(const Jet& a, int k) {
    if (k < 0) fail(ErrorCode::OrderExceeded, "jet_pow: negative exponent");
    Jet r = Jet::constant(a.center(), a.order(), 1.0);
    for (int i = 0; i < k; ++i) r = jet_multiply(r, a);
    return r;
}

Jet jet_compose(const Jet& outer, const std::vector<Jet>& inner) {
    if (static_cast<int>(inner.size()) != outer.dim())
        fail(ErrorCode::DimensionMismatch, "jet_compose: inner count != outer dim");
    for (std::size_t i = 1; i < inner.size(); ++i) check_binary(inner[0], inner[i]);
    for (int i = 0; i < outer.dim(); ++i)
        if (std::abs(inner[i].value() - outer.center()[i]) > 1e-12)
            fail(ErrorCode::CenterChainMismatch, "inner constant terms do not match outer center");

    int order = outer.order();
    for (const Jet& j : inner) order = std::min(order, j.order());
    const Point& c = inner[0].center();

    // shifted inner jets (zero constant term)
    std::vector<Jet> w;
    w.reserve(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) w.push_back(inner[i].truncated(order) - outer.center()[i]);

    // monomials w^beta built incrementally along the graded enumeration
    const SimplexTable& otab = outer.table();
    std::vector<Jet> monomial;
    monomial.reserve(otab.size());
    Jet result(c, order);
    for (int i = 0; i < otab.size(); ++i) {
        const MultiIndex& beta = otab.at(i);
        if (beta.degree() == 0) {
            monomial.push_back(Jet::constant(c, order, 1.0));
        } else {
            if (beta.degree() > order) {
                monomial.push_back(Jet(c, order)); // zero; beyond truncation
            } else {
                int v = 0;
                while (beta.e[v] == 0) ++v;
                MultiIndex prev = beta;
                prev.e[v] -= 1;
                int prev_pos = otab.index_of(prev);
                monomial.push_back(jet_multiply(monomial[prev_pos], w[v]));
            }
        }
        complex cvec = outer.coeff_at(i);
        if (cvec != complex(0.0)) result = result + monomial[i] * cvec;
    }
    return result;
}

complex derivative_at(const Jet& j, const MultiIndex& alpha) {
    if (alpha.degree() > j.order()) fail(ErrorCode::OrderExceeded, "derivative order beyond jet order");
    return j.coefficient(alpha) * alpha.factorial();
}

} // namespace qd
