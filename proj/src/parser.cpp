#include "cuspfol/parser.hpp"

#include <cctype>
#include <map>
#include <memory>

namespace cuspfol {

ParseError::ParseError(const std::string &msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line), column_(column) {}

namespace {

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
    int line, col;
};

std::vector<Token> tokenize(const std::string &s, int line0, int col0) {
    std::vector<Token> out;
    int line = line0, col = col0;
    size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (c == '\n') {
            ++line;
            col = 1;
            ++k;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++k;
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t e = k;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            if (e < s.size() && (s[e] == '.' || s[e] == 'e' || s[e] == 'E'))
                throw ParseError("floating-point literals are not accepted", tl, tc + static_cast<int>(e - k));
            out.push_back({Token::Num, s.substr(k, e - k), tl, tc});
            col += static_cast<int>(e - k);
            k = e;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t e = k;
            while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
            out.push_back({Token::Ident, s.substr(k, e - k), tl, tc});
            col += static_cast<int>(e - k);
            k = e;
            continue;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c), tl, tc});
            ++col;
            ++k;
            continue;
        }
        if (c == '.') throw ParseError("floating-point literals are not accepted", tl, tc);
        throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

struct Node {
    enum Kind { Num, Ident, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    std::string text;  // number digits, identifier or function name
    long exponent = 0;
    std::shared_ptr<Node> a, b;
    int line, col;
};
using NodeP = std::shared_ptr<Node>;

const char *const kFunctions[] = {"exp", "log"};

bool is_function(const std::string &s) {
    for (const char *f : kFunctions)
        if (s == f) return true;
    return false;
}

class Parser {
public:
    explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

    NodeP parse() {
        NodeP n = expr();
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
        return n;
    }

private:
    const Token &peek() const { return t_[p_]; }
    bool is_op(const char *op) const { return peek().kind == Token::Op && peek().text == op; }
    Token take() { return t_[p_++]; }
    [[noreturn]] void fail(const std::string &m) const { throw ParseError(m, peek().line, peek().col); }

    NodeP make(Node::Kind k, const Token &at, NodeP a = nullptr, NodeP b = nullptr) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        n->line = at.line;
        n->col = at.col;
        return n;
    }

    NodeP expr() {
        NodeP n = term();
        while (is_op("+") || is_op("-")) {
            Token op = take();
            n = make(op.text == "+" ? Node::Add : Node::Sub, op, n, term());
        }
        return n;
    }

    NodeP term() {
        NodeP n = unary();
        while (true) {
            if (is_op("*") || is_op("/")) {
                Token op = take();
                n = make(op.text == "*" ? Node::Mul : Node::Div, op, n, unary());
            } else if (peek().kind == Token::Ident || is_op("(")) {
                Token at = peek();
                n = make(Node::Mul, at, n, power());
            } else {
                return n;
            }
        }
    }

    NodeP unary() {
        if (is_op("-")) {
            Token op = take();
            return make(Node::Neg, op, unary());
        }
        if (is_op("+")) {
            take();
            return unary();
        }
        return power();
    }

    NodeP power() {
        NodeP base = primary();
        if (!is_op("^")) return base;
        Token op = take();
        bool paren = false, neg = false;
        if (is_op("(")) {
            take();
            paren = true;
        }
        if (is_op("-")) {
            take();
            neg = true;
        }
        if (peek().kind != Token::Num) fail("exponent must be an integer literal");
        Token e = take();
        if (paren) {
            if (!is_op(")")) fail("expected ')'");
            take();
        }
        NodeP n = make(Node::Pow, op, base);
        n->exponent = std::stol(e.text) * (neg ? -1 : 1);
        return n;
    }

    NodeP primary() {
        const Token &t = peek();
        if (t.kind == Token::Num) {
            Token n = take();
            NodeP r = make(Node::Num, n);
            r->text = n.text;
            return r;
        }
        if (t.kind == Token::Ident) {
            Token id = take();
            if (is_function(id.text) && is_op("(")) {
                take();
                NodeP arg = expr();
                if (!is_op(")")) fail("expected ')'");
                take();
                NodeP r = make(Node::Call, id, arg);
                r->text = id.text;
                return r;
            }
            NodeP r = make(Node::Ident, id);
            r->text = id.text;
            return r;
        }
        if (is_op("(")) {
            take();
            NodeP n = expr();
            if (!is_op(")")) fail("expected ')'");
            take();
            return n;
        }
        if (t.kind == Token::End) fail("unexpected end of input");
        fail("unexpected '" + t.text + "'");
    }

    std::vector<Token> t_;
    size_t p_ = 0;
};

NodeP parse_text(const std::string &s, int line0 = 1, int col0 = 1) { return Parser(tokenize(s, line0, col0)).parse(); }

[[noreturn]] void fail_at(const Node &n, const std::string &m) { throw ParseError(m, n.line, n.col); }

// ---------------------------------------------------------------- sparse bivariate polynomials

using Poly = std::map<std::pair<int, int>, Coeff>;

Poly padd(const Poly &a, const Poly &b, const Coeff &s = 1) {
    Poly r = a;
    for (const auto &[m, c] : b) {
        Coeff &t = r[m];
        t += s * c;
        if (t.is_zero()) r.erase(m);
    }
    return r;
}

Poly pmul(const Poly &a, const Poly &b) {
    Poly r;
    for (const auto &[ma, ca] : a)
        for (const auto &[mb, cb] : b) {
            std::pair<int, int> m{ma.first + mb.first, ma.second + mb.second};
            Coeff &t = r[m];
            t += ca * cb;
            if (t.is_zero()) r.erase(m);
        }
    return r;
}

Poly pconst(const Coeff &c) {
    Poly r;
    if (!c.is_zero()) r[{0, 0}] = c;
    return r;
}

bool is_constant(const Poly &p) { return p.empty() || (p.size() == 1 && p.begin()->first == std::make_pair(0, 0)); }
Coeff constant_of(const Poly &p) { return p.empty() ? Coeff() : p.begin()->second; }

int pdegree(const Poly &p) {
    int d = 0;
    for (const auto &[m, c] : p) d = std::max(d, m.first + m.second);
    return d;
}

Jet2 to_jet(const Poly &p, int order) {
    Jet2 r(order);
    for (const auto &[m, c] : p) r.add_term(m.first, m.second, c);
    return r;
}

Poly ppow(const Poly &p, long e) {
    Poly r = pconst(1);
    for (long k = 0; k < e; ++k) r = pmul(r, p);
    return r;
}

Coeff number(const Node &n) { return Coeff(mpq_class(mpz_class(n.text))); }

// ---------------------------------------------------------------- form semantics: scalar + dx + dy parts

struct FormValue {
    Poly s, dx, dy;
    bool has_diff() const { return !dx.empty() || !dy.empty(); }
};

FormValue eval_form(const Node &n, int &deg) {
    switch (n.kind) {
    case Node::Num:
        return {pconst(number(n)), {}, {}};
    case Node::Ident:
        if (n.text == "x") return {Poly{{{1, 0}, 1}}, {}, {}};
        if (n.text == "y") return {Poly{{{0, 1}, 1}}, {}, {}};
        if (n.text == "i") return {pconst(Coeff::i()), {}, {}};
        if (n.text == "dx") return {{}, pconst(1), {}};
        if (n.text == "dy") return {{}, {}, pconst(1)};
        fail_at(n, "unknown variable '" + n.text + "'");
    case Node::Neg: {
        FormValue v = eval_form(*n.a, deg);
        return {padd({}, v.s, -1), padd({}, v.dx, -1), padd({}, v.dy, -1)};
    }
    case Node::Add:
    case Node::Sub: {
        FormValue a = eval_form(*n.a, deg), b = eval_form(*n.b, deg);
        Coeff s = n.kind == Node::Add ? 1 : -1;
        return {padd(a.s, b.s, s), padd(a.dx, b.dx, s), padd(a.dy, b.dy, s)};
    }
    case Node::Mul: {
        FormValue a = eval_form(*n.a, deg), b = eval_form(*n.b, deg);
        if (a.has_diff() && b.has_diff()) fail_at(n, "product of two differentials");
        FormValue r{pmul(a.s, b.s), padd(pmul(a.s, b.dx), pmul(a.dx, b.s)), padd(pmul(a.s, b.dy), pmul(a.dy, b.s))};
        deg = std::max({deg, pdegree(r.s), pdegree(r.dx), pdegree(r.dy)});
        return r;
    }
    case Node::Div: {
        FormValue a = eval_form(*n.a, deg), b = eval_form(*n.b, deg);
        if (b.has_diff() || !is_constant(b.s)) fail_at(n, "division by a non-constant (use the mero: prefix for quotients)");
        if (b.s.empty()) fail_at(n, "zero denominator");
        Coeff inv = constant_of(b.s).inverse();
        return {padd({}, a.s, inv), padd({}, a.dx, inv), padd({}, a.dy, inv)};
    }
    case Node::Pow: {
        FormValue a = eval_form(*n.a, deg);
        if (a.has_diff()) fail_at(n, "power of a differential");
        if (n.exponent < 0) {
            if (!is_constant(a.s) || a.s.empty()) fail_at(n, "negative power of a non-constant");
            return {pconst(constant_of(a.s).pow(n.exponent)), {}, {}};
        }
        Poly p = ppow(a.s, n.exponent);
        deg = std::max(deg, pdegree(p));
        return {p, {}, {}};
    }
    case Node::Call:
        fail_at(n, "function '" + n.text + "' not allowed in a form");
    }
    fail_at(n, "internal parser error");
}

// ---------------------------------------------------------------- meromorphic semantics: num/den

struct Frac {
    Poly num, den;
};

Frac eval_frac(const Node &n, int &deg) {
    switch (n.kind) {
    case Node::Num:
        return {pconst(number(n)), pconst(1)};
    case Node::Ident:
        if (n.text == "x") return {Poly{{{1, 0}, 1}}, pconst(1)};
        if (n.text == "y") return {Poly{{{0, 1}, 1}}, pconst(1)};
        if (n.text == "i") return {pconst(Coeff::i()), pconst(1)};
        fail_at(n, "unknown variable '" + n.text + "'");
    case Node::Neg: {
        Frac v = eval_frac(*n.a, deg);
        return {padd({}, v.num, -1), v.den};
    }
    case Node::Add:
    case Node::Sub: {
        Frac a = eval_frac(*n.a, deg), b = eval_frac(*n.b, deg);
        Coeff s = n.kind == Node::Add ? 1 : -1;
        if (a.den == b.den) return {padd(a.num, b.num, s), a.den};
        return {padd(pmul(a.num, b.den), pmul(b.num, a.den), s), pmul(a.den, b.den)};
    }
    case Node::Mul: {
        Frac a = eval_frac(*n.a, deg), b = eval_frac(*n.b, deg);
        Frac r{pmul(a.num, b.num), pmul(a.den, b.den)};
        deg = std::max({deg, pdegree(r.num), pdegree(r.den)});
        return r;
    }
    case Node::Div: {
        Frac a = eval_frac(*n.a, deg), b = eval_frac(*n.b, deg);
        if (b.num.empty()) fail_at(n, "zero denominator");
        Frac r{pmul(a.num, b.den), pmul(a.den, b.num)};
        deg = std::max({deg, pdegree(r.num), pdegree(r.den)});
        return r;
    }
    case Node::Pow: {
        Frac a = eval_frac(*n.a, deg);
        long e = n.exponent;
        if (e < 0) {
            if (a.num.empty()) fail_at(n, "zero denominator");
            std::swap(a.num, a.den);
            e = -e;
        }
        Frac r{ppow(a.num, e), ppow(a.den, e)};
        deg = std::max({deg, pdegree(r.num), pdegree(r.den)});
        return r;
    }
    case Node::Call:
        fail_at(n, "function '" + n.text + "' not allowed in a meromorphic quotient");
    }
    fail_at(n, "internal parser error");
}

// ---------------------------------------------------------------- series semantics

template <class J>
struct SeriesSem;

template <>
struct SeriesSem<Jet1> {
    std::string var;
    int order;
    Jet1 constant(const Coeff &c) const { return Jet1::constant(order, c); }
    std::optional<Jet1> variable(const std::string &name) const {
        if (name == var) return Jet1::identity(order);
        return std::nullopt;
    }
    Jet1 call(const Node &n, const Jet1 &a) const {
        if (n.text == "exp") {
            if (!a[0].is_zero()) fail_at(n, "exp needs an argument vanishing at 0");
            return compose(exp_series(order), a);
        }
        if (!a[0].is_one()) fail_at(n, "log needs an argument equal to 1 at 0");
        Jet1 b = a;
        b.set(0, 0);
        return compose(log1p_series(order), b);
    }
};

template <>
struct SeriesSem<Jet2> {
    std::string xv, yv;
    int order;
    Jet2 constant(const Coeff &c) const { return Jet2::constant(order, c); }
    std::optional<Jet2> variable(const std::string &name) const {
        if (name == xv) return Jet2::x(order);
        if (name == yv) return Jet2::y(order);
        return std::nullopt;
    }
    Jet2 call(const Node &n, const Jet2 &a) const {
        if (n.text == "exp") {
            if (!a.coeff(0, 0).is_zero()) fail_at(n, "exp needs an argument vanishing at 0");
            return compose(exp_series(order), a);
        }
        if (!a.coeff(0, 0).is_one()) fail_at(n, "log needs an argument equal to 1 at 0");
        Jet2 b = a;
        b.set(0, 0, 0);
        return compose(log1p_series(order), b);
    }
};

template <class J>
J eval_series(const Node &n, const SeriesSem<J> &sem) {
    switch (n.kind) {
    case Node::Num:
        return sem.constant(number(n));
    case Node::Ident: {
        if (auto v = sem.variable(n.text)) return *v;
        if (n.text == "i") return sem.constant(Coeff::i());
        fail_at(n, "unknown variable '" + n.text + "'");
    }
    case Node::Neg:
        return -eval_series(*n.a, sem);
    case Node::Add:
        return eval_series(*n.a, sem) + eval_series(*n.b, sem);
    case Node::Sub:
        return eval_series(*n.a, sem) - eval_series(*n.b, sem);
    case Node::Mul:
        return eval_series(*n.a, sem) * eval_series(*n.b, sem);
    case Node::Div: {
        J a = eval_series(*n.a, sem), b = eval_series(*n.b, sem);
        if (b.is_zero()) fail_at(n, "zero denominator");
        try {
            J q = a / b;
            return q.with_order(sem.order);
        } catch (const std::domain_error &e) {
            fail_at(n, e.what());
        }
    }
    case Node::Pow: {
        J a = eval_series(*n.a, sem);
        try {
            return pow(a, static_cast<int>(n.exponent));
        } catch (const std::domain_error &e) {
            fail_at(n, e.what());
        }
    }
    case Node::Call:
        return sem.call(n, eval_series(*n.a, sem));
    }
    fail_at(n, "internal parser error");
}

}  // namespace

std::string ParsedForm::print() const {
    if (meromorphic) return "mero: (" + num->str() + ")/(" + den->str() + ")";
    return form.str();
}

ParsedForm parse_form(const std::string &text, int order) {
    size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    ParsedForm out{text, false, OneForm(Jet2(order), Jet2(order)), std::nullopt, std::nullopt, 0};
    if (text.compare(k, 5, "mero:") == 0) {
        std::string body = text.substr(k + 5);
        int deg = 0;
        NodeP n = parse_text(body, 1, static_cast<int>(k) + 6);
        Frac f = eval_frac(*n, deg);
        if (f.num.empty()) throw ParseError("meromorphic quotient has zero numerator", 1, static_cast<int>(k) + 6);
        out.meromorphic = true;
        out.degree = deg;
        out.num = to_jet(f.num, order);
        out.den = to_jet(f.den, order);
        out.form = form_of_meromorphic(*out.num, *out.den);
        return out;
    }
    NodeP n = parse_text(text);
    int deg = 0;
    FormValue v = eval_form(*n, deg);
    if (!v.s.empty()) throw ParseError("term without a differential (dx or dy)", n->line, n->col);
    out.degree = deg;
    out.form = OneForm(to_jet(v.dx, order), to_jet(v.dy, order));
    return out;
}

Jet1 parse_series1(const std::string &text, const std::string &var, int order) {
    NodeP n = parse_text(text);
    return eval_series(*n, SeriesSem<Jet1>{var, order});
}

Jet2 parse_series2(const std::string &text, const std::string &xvar, const std::string &yvar, int order) {
    NodeP n = parse_text(text);
    return eval_series(*n, SeriesSem<Jet2>{xvar, yvar, order});
}

Coeff parse_coeff(const std::string &text) {
    NodeP n = parse_text(text);
    Jet1 j = eval_series(*n, SeriesSem<Jet1>{"", 0});
    return j[0];
}

}  // namespace cuspfol
