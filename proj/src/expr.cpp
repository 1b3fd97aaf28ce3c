#include "idxsplit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <tuple>

namespace idxsplit::dsl {

// ---------------------------------------------------------------------------
// Tree construction

Expr Expr::literal(Index value) { return Expr(std::make_shared<const Node>(value)); }

Expr Expr::variable(Var v) { return Expr(std::make_shared<const Node>(v)); }

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
    return Expr(std::make_shared<const Node>(Binary{op, std::move(lhs), std::move(rhs)}));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_)
        return true;
    const Expr::Node& x = a.node();
    const Expr::Node& y = b.node();
    if (x.index() != y.index())
        return false;
    if (const auto* v = std::get_if<Index>(&x))
        return *v == std::get<Index>(y);
    if (const auto* v = std::get_if<Var>(&x))
        return *v == std::get<Var>(y);
    const auto& l = std::get<Expr::Binary>(x);
    const auto& r = std::get<Expr::Binary>(y);
    return l.op == r.op && l.lhs == r.lhs && l.rhs == r.rhs;
}

Index Bindings::e() const { return checked_sub(checked_add(b, n), 1); }
Index Bindings::s() const { return checked_sub(e(), b); }
Index Bindings::m() const { return checked_add(b, e()); }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, LParen, RParen, Less, LessEqual, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Tok::Int, start, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, start, std::string(src.substr(start, i - start))});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '<':
            if (i + 1 < src.size() && src[i + 1] == '=') {
                out.push_back({Tok::LessEqual, start, "<="});
                i += 2;
                continue;
            }
            kind = Tok::Less;
            break;
        default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    Expr expression() {
        Expr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const BinOp op = next().kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
            lhs = Expr::binary(op, std::move(lhs), term());
        }
        return lhs;
    }

    Relation relation() {
        const Token& t = next();
        if (t.kind == Tok::Less)
            return Relation::Less;
        if (t.kind == Tok::LessEqual)
            return Relation::LessEqual;
        throw unexpected(t, "expected '<' or '<='");
    }

    void index_variable() {
        const Token& t = next();
        if (t.kind != Tok::Ident)
            throw unexpected(t, "expected index variable i");
        if (t.text != "i")
            throw SyntaxError("index variable must be i, got '" + t.text + "'", t.pos);
    }

    void finish() {
        if (peek().kind != Tok::End)
            throw unexpected(peek(), "expected end of input");
    }

private:
    Expr term() {
        Expr lhs = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const BinOp op = next().kind == Tok::Star ? BinOp::Mul : BinOp::Div;
            lhs = Expr::binary(op, std::move(lhs), factor());
        }
        return lhs;
    }

    Expr factor() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Int:
            return Expr::literal(integer(t, false));
        case Tok::Minus: {
            // The only unary minus is the sign of an integer literal.
            const Token& digits = next();
            if (digits.kind != Tok::Int)
                throw SyntaxError("'-' must be followed by an integer literal", t.pos);
            return Expr::literal(integer(digits, true));
        }
        case Tok::Ident:
            return Expr::variable(variable(t));
        case Tok::LParen: {
            Expr inner = expression();
            const Token& close = next();
            if (close.kind != Tok::RParen)
                throw unexpected(close, "expected ')'");
            return inner;
        }
        default:
            throw unexpected(t, "expected integer, variable or '('");
        }
    }

    static Index integer(const Token& t, bool negative) {
        constexpr std::uint64_t limit = std::uint64_t(std::numeric_limits<Index>::max()) + 1;
        std::uint64_t v = 0;
        for (char c : t.text) {
            const auto digit = static_cast<std::uint64_t>(c - '0');
            if (v > (limit - digit) / 10)
                throw SyntaxError("integer literal out of range", t.pos);
            v = v * 10 + digit;
        }
        if (!negative && v == limit)
            throw SyntaxError("integer literal out of range", t.pos);
        return negative ? static_cast<Index>(0 - v) : static_cast<Index>(v);
    }

    static Var variable(const Token& t) {
        if (t.text.size() == 1) {
            switch (t.text[0]) {
            case 'n': return Var::N;
            case 's': return Var::S;
            case 'b': return Var::B;
            case 'e': return Var::E;
            case 'm': return Var::M;
            default: break;
            }
        }
        throw SyntaxError("unknown identifier '" + t.text + "'", t.pos);
    }

    static SyntaxError unexpected(const Token& t, const std::string& expected) {
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        return SyntaxError(expected + ", found " + found, t.pos);
    }

    const Token& peek() const { return tokens_[cursor_]; }
    const Token& next() {
        const Token& t = tokens_[cursor_];
        if (t.kind != Tok::End)
            ++cursor_;
        return t;
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(BinOp op) { return op == BinOp::Add || op == BinOp::Sub ? 1 : 2; }

void print(std::string& out, const Expr& e, int parent, bool right_operand) {
    const Expr::Node& node = e.node();
    if (const auto* v = std::get_if<Index>(&node)) {
        out += *v < 0 ? "(" + std::to_string(*v) + ")" : std::to_string(*v);
    } else if (const auto* var = std::get_if<Var>(&node)) {
        out += static_cast<char>(*var);
    } else {
        const auto& bin = std::get<Expr::Binary>(node);
        const int prec = precedence(bin.op);
        const bool parens = prec < parent || (prec == parent && right_operand);
        if (parens)
            out += '(';
        print(out, bin.lhs, prec, false);
        out += static_cast<char>(bin.op);
        print(out, bin.rhs, prec, true);
        if (parens)
            out += ')';
    }
}

std::string_view symbol(Relation r) { return r == Relation::Less ? "<" : "<="; }

Index lookup(Var v, const Bindings& env) {
    switch (v) {
    case Var::N: return env.n;
    case Var::B: return env.b;
    case Var::E: return env.e();
    case Var::S: return env.s();
    case Var::M: return env.m();
    }
    return 0;
}

bool same_outcome(const Outcome& a, const Outcome& b) {
    if (std::holds_alternative<EvalError>(a) || std::holds_alternative<EvalError>(b))
        return false;
    if (const auto* ra = std::get_if<Range>(&a))
        return same_elements(*ra, std::get<Range>(b));
    return a == b;
}

template <typename Tree, typename Eval>
EquivalenceReport sweep(const Tree& a, const Tree& b, Range n_domain, Range b_domain,
                        Eval eval) {
    EquivalenceReport report;
    for (Index base = b_domain.lo(); base < b_domain.hi(); ++base) {
        for (Index n = n_domain.lo(); n < n_domain.hi(); ++n) {
            const Bindings env{n, base};
            const Outcome lhs = eval(a, env);
            const Outcome rhs = eval(b, env);
            if (same_outcome(lhs, rhs))
                report.record_pass();
            else
                report.record_failure({env, std::nullopt, lhs, rhs});
        }
    }
    return report;
}

template <typename F>
Outcome capture(F&& f) {
    try {
        return f();
    } catch (const Error& err) {
        return EvalError{err.what()};
    }
}

auto order_key(const Counterexample& c) { return std::make_tuple(c.at.n, c.at.b, c.k); }

} // namespace

Expr parse_expr(std::string_view text) {
    Parser p(text);
    Expr e = p.expression();
    p.finish();
    return e;
}

RangeExpr parse_range(std::string_view text) {
    Parser p(text);
    Expr low = p.expression();
    const Relation low_rel = p.relation();
    p.index_variable();
    const Relation high_rel = p.relation();
    Expr high = p.expression();
    p.finish();
    return RangeExpr{std::move(low), low_rel, high_rel, std::move(high)};
}

std::string to_string(const Expr& e) {
    std::string out;
    print(out, e, 0, false);
    return out;
}

std::string to_string(const RangeExpr& r) {
    std::string out = to_string(r.low);
    out += ' ';
    out += symbol(r.low_rel);
    out += " i ";
    out += symbol(r.high_rel);
    out += ' ';
    out += to_string(r.high);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

Index eval_expr(const Expr& e, const Bindings& env, DivMode mode) {
    const Expr::Node& node = e.node();
    if (const auto* v = std::get_if<Index>(&node))
        return *v;
    if (const auto* var = std::get_if<Var>(&node))
        return lookup(*var, env);
    const auto& bin = std::get<Expr::Binary>(node);
    const Index l = eval_expr(bin.lhs, env, mode);
    const Index r = eval_expr(bin.rhs, env, mode);
    switch (bin.op) {
    case BinOp::Add: return checked_add(l, r);
    case BinOp::Sub: return checked_sub(l, r);
    case BinOp::Mul: return checked_mul(l, r);
    case BinOp::Div: return idiv(l, r, mode);
    }
    return 0;
}

Range eval_range(const RangeExpr& r, const Bindings& env, DivMode mode) {
    const Index lo = eval_expr(r.low, env, mode);
    const Index hi = eval_expr(r.high, env, mode);
    return make_range(BoundSpec{lo, r.low_rel == Relation::LessEqual},
                      BoundSpec{hi, r.high_rel == Relation::LessEqual});
}

std::string to_string(const Outcome& o) {
    if (const auto* v = std::get_if<Index>(&o))
        return std::to_string(*v);
    if (const auto* r = std::get_if<Range>(&o))
        return idxsplit::to_string(*r);
    return "error: " + std::get<EvalError>(o).message;
}

void EquivalenceReport::record_failure(Counterexample c) {
    ++checked_;
    ++failures_;
    const auto pos = std::upper_bound(
        counterexamples_.begin(), counterexamples_.end(), c,
        [](const Counterexample& x, const Counterexample& y) { return order_key(x) < order_key(y); });
    counterexamples_.insert(pos, std::move(c));
    if (counterexamples_.size() > max_counterexamples)
        counterexamples_.pop_back();
}

void EquivalenceReport::merge(const EquivalenceReport& other) {
    const std::uint64_t checked = checked_ + other.checked_;
    const std::uint64_t failures = failures_ + other.failures_;
    for (const Counterexample& c : other.counterexamples_)
        record_failure(c);
    checked_ = checked;
    failures_ = failures;
}

EquivalenceReport check_equiv(const Expr& a, const Expr& b, Range n_domain, DivMode mode,
                              Range b_domain) {
    return sweep(a, b, n_domain, b_domain, [mode](const Expr& e, const Bindings& env) {
        return capture([&]() -> Outcome { return eval_expr(e, env, mode); });
    });
}

EquivalenceReport check_equiv(const RangeExpr& a, const RangeExpr& b, Range n_domain,
                              DivMode mode, Range b_domain) {
    return sweep(a, b, n_domain, b_domain, [mode](const RangeExpr& r, const Bindings& env) {
        return capture([&]() -> Outcome { return eval_range(r, env, mode); });
    });
}

std::string_view name(Identity id) {
    switch (id) {
    case Identity::Halves: return "halves";
    case Identity::Connecting: return "connecting";
    case Identity::KwaySum: return "kway";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view text) {
    for (Identity id : {Identity::Halves, Identity::Connecting, Identity::KwaySum})
        if (name(id) == text)
            return id;
    return std::nullopt;
}

EquivalenceReport check_identity(Identity which, Range n_domain, std::optional<Range> k_domain) {
    switch (which) {
    case Identity::Halves:
        return check_equiv(parse_expr("n/2+(n+1)/2"), parse_expr("n"), n_domain, DivMode::Floor);
    case Identity::Connecting:
        if (!n_domain.empty() && n_domain.lo() < 1)
            throw DomainError("the connecting identity holds only for n > 0");
        return check_equiv(parse_expr("(n+1)/2-(n-1)/2"), parse_expr("1"), n_domain,
                           DivMode::Floor);
    case Identity::KwaySum:
        break;
    }
    if (!k_domain)
        throw DomainError("the k-way identity needs a k domain");
    if (!k_domain->empty() && k_domain->lo() < 1)
        throw DomainError("the k-way identity needs k >= 1");
    EquivalenceReport report;
    for (Index k = k_domain->lo(); k < k_domain->hi(); ++k) {
        for (Index n = n_domain.lo(); n < n_domain.hi(); ++n) {
            Index sum = 0;
            for (Index r = 0; r < k; ++r)
                sum = checked_add(sum, idiv(checked_add(n, r), k, DivMode::Floor));
            if (sum == n)
                report.record_pass();
            else
                report.record_failure({Bindings{n, 0}, k, sum, n});
        }
    }
    return report;
}

} // namespace idxsplit::dsl
