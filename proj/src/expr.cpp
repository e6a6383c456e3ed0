#include "qd/expr.hpp"

#include <sstream>

#include "qd/errors.hpp"
#include "qd/gauss.hpp"

namespace qd {

struct Expr::Node {
    Kind kind;
    int nvars = 0;
    complex cval;        // Const
    int var = -1;        // Var
    int exponent = 0;    // Pow
    int gauss_order = 0; // SpanIntegral
    std::vector<Expr> kids;
};

static Expr make_node(Expr::Node n) { return Expr::from_node(std::make_shared<const Expr::Node>(std::move(n))); }

static const Expr::Node& node_of(const Expr& e) { return e.node(); }

int Expr::nvars() const { return node_->nvars; }
Expr::Kind Expr::kind() const { return node_->kind; }

Expr Expr::constant(complex c, int nvars) {
    Node n;
    n.kind = Kind::Const;
    n.nvars = nvars;
    n.cval = c;
    return make_node(std::move(n));
}

Expr Expr::var(int index, int nvars) {
    if (index < 0 || index >= nvars) fail(ErrorCode::DimensionMismatch, "variable index out of range");
    Node n;
    n.kind = Kind::Var;
    n.nvars = nvars;
    n.var = index;
    return make_node(std::move(n));
}

static void check_same_nvars(const Expr& a, const Expr& b) {
    if (a.nvars() != b.nvars()) fail(ErrorCode::DimensionMismatch, "operand variable counts differ");
}

static Expr binary(Expr::Kind k, const Expr& a, const Expr& b) {
    check_same_nvars(a, b);
    Expr::Node n;
    n.kind = k;
    n.nvars = a.nvars();
    n.kids = {a, b};
    return make_node(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return binary(Expr::Kind::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return binary(Expr::Kind::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return binary(Expr::Kind::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return binary(Expr::Kind::Div, a, b); }

Expr operator-(const Expr& a) {
    Expr::Node n;
    n.kind = Expr::Kind::Neg;
    n.nvars = a.nvars();
    n.kids = {a};
    return make_node(std::move(n));
}

Expr operator+(const Expr& a, complex c) { return a + Expr::constant(c, a.nvars()); }
Expr operator*(const Expr& a, complex c) { return a * Expr::constant(c, a.nvars()); }
Expr operator*(complex c, const Expr& a) { return a * c; }
Expr operator-(complex c, const Expr& a) { return Expr::constant(c, a.nvars()) - a; }

Expr Expr::exp_of(const Expr& a) {
    Node n;
    n.kind = Kind::Exp;
    n.nvars = a.nvars();
    n.kids = {a};
    return make_node(std::move(n));
}

Expr Expr::int_pow(const Expr& a, int k) {
    if (k < 0) fail(ErrorCode::SpecParseError, "int_pow: exponent must be >= 0");
    Node n;
    n.kind = Kind::Pow;
    n.nvars = a.nvars();
    n.exponent = k;
    n.kids = {a};
    return make_node(std::move(n));
}

Expr Expr::compose(const Expr& outer, const std::vector<Expr>& inner) {
    if (static_cast<int>(inner.size()) != outer.nvars())
        fail(ErrorCode::DimensionMismatch, "compose: inner count != outer variable count");
    for (std::size_t i = 1; i < inner.size(); ++i) check_same_nvars(inner[0], inner[i]);
    Node n;
    n.kind = Kind::Compose;
    n.nvars = inner[0].nvars();
    n.kids.push_back(outer);
    for (auto& e : inner) n.kids.push_back(e);
    return make_node(std::move(n));
}

Expr Expr::span_integral(const Expr& g, const Expr& gamma, int gauss_order) {
    if (g.nvars() < 2) fail(ErrorCode::DimensionMismatch, "span_integral: needs at least 2 variables");
    if (gamma.nvars() != g.nvars() - 1)
        fail(ErrorCode::DimensionMismatch, "span_integral: gamma must have n-1 variables");
    Node n;
    n.kind = Kind::SpanIntegral;
    n.nvars = g.nvars();
    n.gauss_order = gauss_order;
    n.kids = {g, gamma};
    return make_node(std::move(n));
}

Expr Expr::polynomial(const std::vector<complex>& coeffs, int nvars, int var) {
    Expr z = Expr::var(var, nvars);
    Expr acc = Expr::constant(coeffs.empty() ? complex(0.0) : coeffs.back(), nvars);
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k)
        acc = acc * z + Expr::constant(coeffs[k], nvars);
    return acc;
}

// ---------------------------------------------------------------------------
// generic evaluation over an algebra (complex or Jet)

namespace {

inline complex alg_const(const complex& /*proto*/, complex c) { return c; }
inline Jet alg_const(const Jet& proto, complex c) { return Jet::constant(proto.center(), proto.order(), c); }
inline complex alg_mul(const complex& a, const complex& b) { return a * b; }
inline Jet alg_mul(const Jet& a, const Jet& b) { return jet_multiply(a, b); }
inline complex alg_div(const complex& a, const complex& b) {
    if (std::abs(b) < 1e-300) fail(ErrorCode::PoleHit, "division by zero in expression");
    return a / b;
}
inline Jet alg_div(const Jet& a, const Jet& b) { return jet_divide(a, b); }
inline complex alg_exp(const complex& a) { return std::exp(a); }
inline Jet alg_exp(const Jet& a) { return jet_exp(a); }
inline complex alg_pow(const complex& a, int k) {
    complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}
inline Jet alg_pow(const Jet& a, int k) { return jet_pow(a, k); }
inline complex alg_scale(const complex& a, double s) { return a * s; }
inline Jet alg_scale(const Jet& a, double s) { return a * complex(s); }

template <class T>
T eval_generic(const Expr::Node& n, const std::vector<T>& vars) {
    switch (n.kind) {
        case Expr::Kind::Const: return alg_const(vars[0], n.cval);
        case Expr::Kind::Var: return vars[n.var];
        case Expr::Kind::Add:
            return eval_generic(node_of(n.kids[0]), vars) + eval_generic(node_of(n.kids[1]), vars);
        case Expr::Kind::Sub:
            return eval_generic(node_of(n.kids[0]), vars) - eval_generic(node_of(n.kids[1]), vars);
        case Expr::Kind::Mul:
            return alg_mul(eval_generic(node_of(n.kids[0]), vars), eval_generic(node_of(n.kids[1]), vars));
        case Expr::Kind::Div:
            return alg_div(eval_generic(node_of(n.kids[0]), vars), eval_generic(node_of(n.kids[1]), vars));
        case Expr::Kind::Neg: return alg_scale(eval_generic(node_of(n.kids[0]), vars), -1.0);
        case Expr::Kind::Exp: return alg_exp(eval_generic(node_of(n.kids[0]), vars));
        case Expr::Kind::Pow: return alg_pow(eval_generic(node_of(n.kids[0]), vars), n.exponent);
        case Expr::Kind::Compose: {
            std::vector<T> inner;
            inner.reserve(n.kids.size() - 1);
            for (std::size_t i = 1; i < n.kids.size(); ++i)
                inner.push_back(eval_generic(node_of(n.kids[i]), vars));
            return eval_generic(node_of(n.kids[0]), inner);
        }
        case Expr::Kind::SpanIntegral: {
            const int nv = n.nvars;
            std::vector<T> zprime(vars.begin(), vars.begin() + (nv - 1));
            T a = eval_generic(node_of(n.kids[1]), zprime);
            T d = vars[nv - 1] - a;
            auto rule = gauss_legendre(n.gauss_order);
            std::vector<T> arg = zprime;
            arg.push_back(a); // placeholder for tau
            T acc = alg_const(vars[0], 0.0);
            for (int k = 0; k < n.gauss_order; ++k) {
                double x01 = 0.5 * (rule->x[k] + 1.0);
                double w01 = 0.5 * rule->w[k];
                arg[nv - 1] = a + alg_scale(d, x01);
                acc = acc + alg_scale(alg_mul(eval_generic(node_of(n.kids[0]), arg), d), w01);
            }
            return acc;
        }
    }
    fail(ErrorCode::SpecParseError, "corrupt expression node");
}

} // namespace

complex Expr::eval(const Point& z) const {
    if (static_cast<int>(z.size()) != nvars())
        fail(ErrorCode::DimensionMismatch, "eval: point dimension != expression variables");
    return eval_generic<complex>(*node_, z);
}

Jet Expr::eval_jets(const std::vector<Jet>& vars) const {
    if (static_cast<int>(vars.size()) != nvars())
        fail(ErrorCode::DimensionMismatch, "eval_jets: jet count != expression variables");
    return eval_generic<Jet>(*node_, vars);
}

Jet Expr::lift(const Point& center, int order) const {
    if (static_cast<int>(center.size()) != nvars())
        fail(ErrorCode::DimensionMismatch, "lift: center dimension != expression variables");
    std::vector<Jet> vars;
    vars.reserve(center.size());
    for (int i = 0; i < nvars(); ++i) vars.push_back(Jet::variable(center, order, i));
    return eval_generic<Jet>(*node_, vars);
}

Jet jet_lift(const Expr& f, const Point& center, int order) { return f.lift(center, order); }

// ---------------------------------------------------------------------------
// symbolic derivative

Expr Expr::derivative(int var) const {
    const Node& n = *node_;
    const int nv = n.nvars;
    switch (n.kind) {
        case Kind::Const: return constant(0.0, nv);
        case Kind::Var: return constant(n.var == var ? 1.0 : 0.0, nv);
        case Kind::Add: return n.kids[0].derivative(var) + n.kids[1].derivative(var);
        case Kind::Sub: return n.kids[0].derivative(var) - n.kids[1].derivative(var);
        case Kind::Mul:
            return n.kids[0].derivative(var) * n.kids[1] + n.kids[0] * n.kids[1].derivative(var);
        case Kind::Div:
            return (n.kids[0].derivative(var) * n.kids[1] - n.kids[0] * n.kids[1].derivative(var)) /
                   int_pow(n.kids[1], 2);
        case Kind::Neg: return -n.kids[0].derivative(var);
        case Kind::Exp: return exp_of(n.kids[0]) * n.kids[0].derivative(var);
        case Kind::Pow: {
            if (n.exponent == 0) return constant(0.0, nv);
            return constant(static_cast<double>(n.exponent), nv) * int_pow(n.kids[0], n.exponent - 1) *
                   n.kids[0].derivative(var);
        }
        case Kind::Compose: {
            // chain rule: sum_j (d_j outer) o inner * d inner_j
            std::vector<Expr> inner(n.kids.begin() + 1, n.kids.end());
            Expr acc = constant(0.0, nv);
            for (std::size_t j = 0; j < inner.size(); ++j) {
                Expr dj = n.kids[0].derivative(static_cast<int>(j));
                acc = acc + compose(dj, inner) * inner[j].derivative(var);
            }
            return acc;
        }
        case Kind::SpanIntegral: {
            const Expr& g = n.kids[0];
            const Expr& gamma = n.kids[1];
            if (var == nv - 1) return g;
            // d/dz_j int_{gamma}^{z_n} g = int d_j g  -  gamma_j' * g(z', gamma(z'))
            Expr dint = span_integral(g.derivative(var), gamma, n.gauss_order);
            std::vector<Expr> at_gamma;
            for (int i = 0; i < nv - 1; ++i) at_gamma.push_back(Expr::var(i, nv));
            std::vector<Expr> embed_vars;
            for (int i = 0; i < nv - 1; ++i) embed_vars.push_back(Expr::var(i, nv));
            at_gamma.push_back(compose(gamma, embed_vars));
            Expr dgamma_n = compose(gamma.derivative(var), embed_vars);
            return dint - dgamma_n * compose(g, at_gamma);
        }
    }
    fail(ErrorCode::SpecParseError, "corrupt expression node");
}

Expr Expr::conjugated() const {
    const Node& n = *node_;
    Node m = n;
    if (n.kind == Kind::Const) {
        m.cval = std::conj(n.cval);
    } else {
        for (auto& k : m.kids) k = k.conjugated();
    }
    return make_node(std::move(m));
}

// ---------------------------------------------------------------------------
// printing

static void print_node(const Expr::Node& n, std::ostream& os);

static void print_expr(const Expr& e, std::ostream& os) { print_node(node_of(e), os); }

static void print_node(const Expr::Node& n, std::ostream& os) {
    auto bin = [&](const char* op) {
        os << '(';
        print_expr(n.kids[0], os);
        os << ' ' << op << ' ';
        print_expr(n.kids[1], os);
        os << ')';
    };
    switch (n.kind) {
        case Expr::Kind::Const:
            if (n.cval.imag() == 0.0) {
                os << n.cval.real();
            } else {
                os << '(' << n.cval.real() << (n.cval.imag() < 0 ? "" : "+") << n.cval.imag() << "i)";
            }
            break;
        case Expr::Kind::Var: os << 'z' << (n.var + 1); break;
        case Expr::Kind::Add: bin("+"); break;
        case Expr::Kind::Sub: bin("-"); break;
        case Expr::Kind::Mul: bin("*"); break;
        case Expr::Kind::Div: bin("/"); break;
        case Expr::Kind::Neg:
            os << "-(";
            print_expr(n.kids[0], os);
            os << ')';
            break;
        case Expr::Kind::Exp:
            os << "exp(";
            print_expr(n.kids[0], os);
            os << ')';
            break;
        case Expr::Kind::Pow:
            os << '(';
            print_expr(n.kids[0], os);
            os << ")^" << n.exponent;
            break;
        case Expr::Kind::Compose:
            os << "compose(";
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                if (i) os << ", ";
                print_expr(n.kids[i], os);
            }
            os << ')';
            break;
        case Expr::Kind::SpanIntegral:
            os << "integral(";
            print_expr(n.kids[0], os);
            os << ", from=";
            print_expr(n.kids[1], os);
            os << ')';
            break;
    }
}

std::string Expr::to_string() const {
    std::ostringstream os;
    print_node(*node_, os);
    return os.str();
}

static nlohmann::json const_to_json(complex c) {
    if (c.imag() == 0.0) return c.real();
    return nlohmann::json::array({c.real(), c.imag()});
}

nlohmann::json Expr::to_json() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Const: return const_to_json(n.cval);
        case Kind::Var: return "z" + std::to_string(n.var + 1);
        case Kind::Add: return {{"add", {n.kids[0].to_json(), n.kids[1].to_json()}}};
        case Kind::Sub: return {{"sub", {n.kids[0].to_json(), n.kids[1].to_json()}}};
        case Kind::Mul: return {{"mul", {n.kids[0].to_json(), n.kids[1].to_json()}}};
        case Kind::Div: return {{"div", {n.kids[0].to_json(), n.kids[1].to_json()}}};
        case Kind::Neg: return {{"neg", n.kids[0].to_json()}};
        case Kind::Exp: return {{"exp", n.kids[0].to_json()}};
        case Kind::Pow: return {{"pow", {n.kids[0].to_json(), n.exponent}}};
        case Kind::Compose:
        case Kind::SpanIntegral: break;
    }
    fail(ErrorCode::SpecParseError, "expression node has no scenario-grammar form: " + to_string());
}

// ---------------------------------------------------------------------------
// scenario-file expression format

static complex parse_number(const nlohmann::json& j) {
    if (j.is_number()) return complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return complex(j[0].get<double>(), j[1].get<double>());
    fail(ErrorCode::SpecParseError, "expected number or [re, im] pair: " + j.dump());
}

Expr parse_expr(const nlohmann::json& spec, int nvars) {
    if (spec.is_number() || (spec.is_array() && spec.size() == 2 && spec[0].is_number()))
        return Expr::constant(parse_number(spec), nvars);
    if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        if (s.size() >= 2 && s[0] == 'z') {
            int idx = std::stoi(s.substr(1)) - 1;
            if (idx < 0 || idx >= nvars) fail(ErrorCode::SpecParseError, "variable out of range: " + s);
            return Expr::var(idx, nvars);
        }
        if (s == "i") return Expr::constant(complex(0.0, 1.0), nvars);
        fail(ErrorCode::SpecParseError, "unknown expression token: " + s);
    }
    if (!spec.is_object() || spec.size() != 1)
        fail(ErrorCode::SpecParseError, "expected single-operator object: " + spec.dump());
    const std::string op = spec.begin().key();
    const nlohmann::json& arg = spec.begin().value();
    auto list = [&](std::size_t min_n) {
        if (!arg.is_array() || arg.size() < min_n)
            fail(ErrorCode::SpecParseError, "operator '" + op + "' expects an argument list");
        std::vector<Expr> kids;
        for (auto& a : arg) kids.push_back(parse_expr(a, nvars));
        return kids;
    };
    if (op == "add") {
        auto kids = list(1);
        Expr acc = kids[0];
        for (std::size_t i = 1; i < kids.size(); ++i) acc = acc + kids[i];
        return acc;
    }
    if (op == "mul") {
        auto kids = list(1);
        Expr acc = kids[0];
        for (std::size_t i = 1; i < kids.size(); ++i) acc = acc * kids[i];
        return acc;
    }
    if (op == "sub") {
        auto kids = list(2);
        return kids[0] - kids[1];
    }
    if (op == "div") {
        auto kids = list(2);
        return kids[0] / kids[1];
    }
    if (op == "neg") return -parse_expr(arg, nvars);
    if (op == "exp") return Expr::exp_of(parse_expr(arg, nvars));
    if (op == "pow") {
        if (!arg.is_array() || arg.size() != 2 || !arg[1].is_number_integer())
            fail(ErrorCode::SpecParseError, "pow expects [base, integer]");
        return Expr::int_pow(parse_expr(arg[0], nvars), arg[1].get<int>());
    }
    fail(ErrorCode::SpecParseError, "unknown operator: " + op);
}

} // namespace qd
