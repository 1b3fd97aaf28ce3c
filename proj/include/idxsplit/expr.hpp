#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idxsplit/intdiv.hpp"
#include "idxsplit/range.hpp"

// A small language for index-bound expressions such as "(n+1)/2" and
// ranges such as "0 <= i < n-n/2", evaluated under a chosen DivMode.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := integer | "-" integer | "n" | "s" | "b" | "e" | "m" | "(" expr ")"
//   range  := expr ("<="|"<") "i" ("<="|"<") expr
namespace idxsplit::dsl {

// Frame parameters. Only n and b are bound; e, s, m are derived.
enum class Var : char { N = 'n', S = 's', B = 'b', E = 'e', M = 'm' };

enum class BinOp : char { Add = '+', Sub = '-', Mul = '*', Div = '/' };

// Immutable expression tree; copies share structure.
class Expr {
public:
    struct Binary;
    using Node = std::variant<Index, Var, Binary>;

    static Expr literal(Index value);
    static Expr variable(Var v);
    static Expr binary(BinOp op, Expr lhs, Expr rhs);

    const Node& node() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Expr::Binary {
    BinOp op;
    Expr lhs;
    Expr rhs;
};

inline const Expr::Node& Expr::node() const { return *node_; }

enum class Relation { Less, LessEqual };

// low (<|<=) i (<|<=) high
struct RangeExpr {
    Expr low;
    Relation low_rel;
    Relation high_rel;
    Expr high;

    friend bool operator==(const RangeExpr&, const RangeExpr&) = default;
};

struct Bindings {
    Index n = 0;
    Index b = 0;

    Index e() const;  // b + n - 1
    Index s() const;  // e - b
    Index m() const;  // b + e

    friend bool operator==(const Bindings&, const Bindings&) = default;
};

Expr parse_expr(std::string_view text);
RangeExpr parse_range(std::string_view text);

// Minimal-parenthesis rendering; parse(to_string(x)) == x.
std::string to_string(const Expr& e);
std::string to_string(const RangeExpr& r);
std::ostream& operator<<(std::ostream& os, const Expr& e);

Index eval_expr(const Expr& e, const Bindings& env, DivMode mode);
Range eval_range(const RangeExpr& r, const Bindings& env, DivMode mode);

// Result of evaluating one side at one binding: a value, a normalized
// range, or the message of the error evaluation raised.
struct EvalError {
    std::string message;
    friend bool operator==(const EvalError&, const EvalError&) = default;
};
using Outcome = std::variant<Index, Range, EvalError>;
std::string to_string(const Outcome& o);

struct Counterexample {
    Bindings at;
    std::optional<Index> k;  // only for the k-way identity
    Outcome left;
    Outcome right;
};

class EquivalenceReport {
public:
    static constexpr std::size_t max_counterexamples = 10;

    bool holds() const { return failures_ == 0; }
    std::uint64_t checked() const { return checked_; }
    std::uint64_t failures() const { return failures_; }
    // The first few failures in (n, b) order, never more than
    // max_counterexamples.
    const std::vector<Counterexample>& counterexamples() const { return counterexamples_; }

    void record_pass() { ++checked_; }
    void record_failure(Counterexample c);

    // Order-independent: merging the reports of disjoint sweeps in any order
    // gives the same result.
    void merge(const EquivalenceReport& other);

private:
    std::uint64_t checked_ = 0;
    std::uint64_t failures_ = 0;
    std::vector<Counterexample> counterexamples_;
};

// Exhaustive comparison over n in n_domain (half-open) and b in b_domain.
// Ranges are compared as sets. Evaluation errors count as counterexamples.
EquivalenceReport check_equiv(const Expr& a, const Expr& b, Range n_domain, DivMode mode,
                              Range b_domain = Range(0, 1));
EquivalenceReport check_equiv(const RangeExpr& a, const RangeExpr& b, Range n_domain,
                              DivMode mode, Range b_domain = Range(0, 1));

enum class Identity {
    Halves,      // n/2 + (n+1)/2 = n
    Connecting,  // (n+1)/2 - (n-1)/2 = 1, n > 0
    KwaySum,     // sum over r in [0,k) of (n+r)/k = n
};

std::string_view name(Identity id);
std::optional<Identity> parse_identity(std::string_view text);

// Floor division throughout. KwaySum needs k_domain (k >= 1);
// Connecting needs n_domain within n > 0.
EquivalenceReport check_identity(Identity which, Range n_domain,
                                 std::optional<Range> k_domain = std::nullopt);

} // namespace idxsplit::dsl
