#pragma once

#include "alc/scalar.hpp"
#include "alc/type.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace alc {

enum class Kind {
    Star, True, False, NZero, Zero, Var, Lam, App, Pair, Fst, Snd,
    Sum, Scal, Canon, Cocanon, Fix, If, Succ, Pred, IsZero
};

// strict: full module laws, 0*s -> 0. weak: the zero-scalar rule is dropped.
enum class Mode { Strict, Weak };

const char* mode_name(Mode m);

// Immutable term tree. Computations and values share one syntax; value-ness
// is the predicate is_value(). Equality is alpha-equivalence (see compare()).
class Term {
public:
    struct Entry;

    static Term var(std::string name);
    static Term lam(std::string binder, std::optional<Type> annot, Term body);
    static Term app(Term fn, Term arg);
    static Term pair(Term a, Term b);
    static Term fst(Term t);
    static Term snd(Term t);
    static Term star();
    // n-ary formal sum; entries keep their coefficient
    static Term sum(std::vector<Entry> entries);
    static Term plus(Term a, Term b);
    static Term scal(Scalar coef, Term t);
    static Term zero(std::optional<Type> annot = std::nullopt);
    static Term canon(Term t);
    static Term cocanon(Term t);
    static Term fix(Term t);
    static Term tt();
    static Term ff();
    static Term ifz(Term cond, Term then_t, Term else_t);
    static Term nzero();
    static Term succ(Term t);
    static Term pred(Term t);
    static Term iszero(Term t);
    static Term numeral(unsigned n);

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return kind() == k; }
    // Var name or lambda binder.
    const std::string& name() const { return node_->name; }
    // Lambda binder type or zero ascription.
    const std::optional<Type>& annot() const { return node_->annot; }
    // Scal coefficient.
    const Scalar& coef() const { return node_->coef; }
    const std::vector<Term>& kids() const { return node_->kids; }
    const Term& kid(std::size_t i) const { return node_->kids[i]; }
    // Sum coefficients, parallel to kids().
    const std::vector<Scalar>& coefs() const { return node_->coefs; }
    std::vector<Entry> entries() const;

    // Lam body, unary operand, Fix argument.
    const Term& body() const { return kid(0); }

    // Replace the children (same kind, binder, annotation, scalars).
    Term with_kids(std::vector<Term> kids) const;

    bool same_node(const Term& o) const { return node_ == o.node_; }
    std::size_t size() const;

    // Concrete syntax; parse(str()) is alpha-equal to *this.
    std::string str() const;

private:
    struct Node {
        Kind kind;
        std::string name;
        std::optional<Type> annot;
        Scalar coef;
        std::vector<Term> kids;
        std::vector<Scalar> coefs;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(Node n);
    std::shared_ptr<const Node> node_;
};

struct Term::Entry {
    Scalar coef;
    Term base;
};

// Total, deterministic, alpha-invariant order. Bound variables compare by
// de Bruijn index, free variables by name; annotations are ignored.
std::strong_ordering compare(const Term& a, const Term& b);
inline bool alpha_equal(const Term& a, const Term& b) { return compare(a, b) == 0; }

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};
using TermSet = std::set<Term, TermLess>;

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& x, const Term& t);

// Capture-avoiding substitution t[x <- v]; bound names clashing with free
// variables of v get primed.
Term substitute(const Term& t, const std::string& x, const Term& v);

// Sum, scalar multiple or zero: the heads the linearity rules act on.
bool is_linear_head(const Term& t);

bool is_value(const Term& t);

// A term whose canonical form is a (possibly empty) combination of values.
bool is_value_combination(const Term& t);

bool contains_fix(const Term& t);

struct Canonical {
    Term term;
    // Strict mode dropped at least one zero-coefficient summand.
    bool used_zero_rule = false;
};

// AC-canonical form: every linear position becomes a sorted sum of distinct
// non-linear bases; scalars fused, 1*s collapsed, zero summands removed and,
// in strict mode only, zero-coefficient summands removed. Applied everywhere,
// including under binders. Idempotent.
// With absorb_f false, like summands are kept apart and zero coefficients
// survive in both modes: the F rules and 0*s -> 0 are left to the caller.
Canonical canonicalize(const Term& t, Mode mode, bool absorb_f = true);
inline Term canonical(const Term& t, Mode mode) { return canonicalize(t, mode).term; }

// Equality modulo associativity and commutativity of + only: no scalar
// arithmetic, no merging, no zero erasure.
bool ac_equal(const Term& a, const Term& b);

// Linear view of a term: the canonical entries at its root.
std::vector<Term::Entry> linear_entries(const Term& t);

// Rebuild a term from entries: [] -> zero, [(1,b)] -> b, [(a,b)] -> a*b.
Term from_entries(std::vector<Term::Entry> entries);

// Plus-number and scalar-complexity termination measures.
struct Measure {
    boost::multiprecision::cpp_int np;
    boost::multiprecision::cpp_int cx;
    // Lexicographic on (np, cx).
    bool operator<(const Measure& o) const { return np < o.np || (np == o.np && cx < o.cx); }
    bool operator==(const Measure& o) const { return np == o.np && cx == o.cx; }
};
Measure measure(const Term& t);

}  // namespace alc
