#include "alc/prelude.hpp"

#include <sstream>

namespace alc {

Type qbool_type() { return Type::arrow(Type::monad(Type::top()), Type::arrow(Type::monad(Type::top()), Type::monad(Type::top()))); }

ParseOptions prelude_parse_options() {
    ParseOptions o;
    o.type_aliases.emplace("qbool", qbool_type());
    return o;
}

namespace {

Term p(const std::string& src) { return parse_term(src, prelude_parse_options()); }

std::string braced(const Scalar& s) { return "{" + s.str() + "}"; }

const Scalar& inv_sqrt2() {
    static const Scalar c = Scalar(0, Rat(1, 2), 0, 0);
    return c;
}

}  // namespace

Term ket(const Scalar& alpha, const Scalar& beta) {
    return p("\\x:M T. \\y:M T. [" + braced(alpha) + "*!x + " + braced(beta) + "*!y]");
}

Term ttq() { return p("\\x:M T. \\y:M T. [!x]"); }
Term ffq() { return p("\\x:M T. \\y:M T. [!y]"); }

Term hadamard() {
    std::string c = braced(inv_sqrt2());
    return p("\\x:qbool. \\a:M T. \\b:M T. [!(x [" + c + "*(!a + !b)] [" + c + "*(!a - !b)])]");
}

Term hadamard_dens() { return substitute(p("\\v:qbool -> qbool. \\x:qbool. H (v (H x))"), "H", hadamard()); }

Term dens(const Scalar& a, const Scalar& b) {
    return p("\\x:qbool. \\a:M T. \\b:M T. [!(x [" + braced(a * a.conj()) + "*!a + " + braced(a * b.conj()) + "*!b] [" +
             braced(a.conj() * b) + "*!a + " + braced(b * b.conj()) + "*!b])]");
}

Term diagonal(const Scalar& a, const Scalar& b) {
    return p("\\x:qbool. \\a:M T. \\b:M T. [!(x [" + braced(a * a.conj()) + "*!a] [" + braced(b * b.conj()) + "*!b])]");
}

Term measure_p() {
    Term t = p("\\v:qbool -> qbool. \\x:qbool. \\a:M T. \\b:M T. "
               "[!(x [!(v tq [!a] [(zero : T)])] [!(v fq [(zero : T)] [!b])])]");
    return substitute(substitute(t, "tq", ttq()), "fq", ffq());
}

Term measure_p_literal() {
    return p("\\v:qbool -> qbool. \\x:qbool. \\a:M T. \\b:M T. "
             "[!((v x) [!a] [(zero : T)] + (v x) [(zero : T)] [!b])]");
}

Term yb(const Term& b, const Type& b_type) {
    Term body = Term::canon(Term::plus(b, Term::cocanon(Term::var("x'yb"))));
    Term lam = Term::lam("x'yb", Type::monad(b_type), body);
    // rename the binder to something readable when b does not use it
    if (!occurs_free("x", b)) lam = Term::lam("x", Type::monad(b_type), substitute(body, "x'yb", Term::var("x")));
    return Term::fix(lam);
}

Term exp_term() {
    return p("Y(\\f:M(int -> M T -> M T). [\\n:int. \\x:M T. "
             "if iszero n then [star] else [(\\u:T. !(!f (pred n) x)) !x]])");
}

Term exp_literal() {
    return p("Y(\\f:M(int -> M T -> M T). [\\n:int. \\x:M T. if iszero n then !x else !f (pred n) x])");
}

Term pow_term() { return substitute(p("\\x:M int. E !x"), "E", exp_term()); }
Term pow_literal() { return substitute(p("\\x:M int. E x"), "E", exp_literal()); }

Term polynomial(const std::vector<std::pair<Scalar, unsigned>>& terms) {
    std::vector<Term::Entry> es;
    for (const auto& [beta, n] : terms) es.push_back({beta, Term::numeral(n)});
    if (es.empty()) return Term::canon(Term::zero(Type::integer()));
    return Term::canon(es.size() == 1 ? Term::scal(es[0].coef, es[0].base) : Term::sum(std::move(es)));
}

const std::vector<PreludeEntry>& prelude() {
    static const std::vector<PreludeEntry> entries = [] {
        Type q = qbool_type();
        Type qq = Type::arrow(q, q);
        Type mt = Type::monad(Type::top());
        Type exp_ty = Type::arrow(Type::integer(), Type::arrow(mt, mt));
        return std::vector<PreludeEntry>{
            {"ttq", ttq(), q, "|0>"},
            {"ffq", ffq(), q, "|1>"},
            {"H", hadamard(), qq, "Hadamard gate"},
            {"H'", hadamard_dens(), Type::arrow(qq, qq), "Hadamard on density terms: \\v x. H (v (H x))"},
            {"P", measure_p(), Type::arrow(qq, qq), "measurement: keeps the diagonal"},
            {"P_literal", measure_p_literal(), Type::arrow(qq, qq), "measurement as printed; off-diagonal terms survive"},
            {"Exp", exp_term(), exp_ty, "n |-> ([a*star] |-> [a^n*star])"},
            {"Exp_literal", exp_literal(), std::nullopt, "as printed; branches have types T and M T"},
            {"Pow", pow_term(), Type::arrow(Type::monad(Type::integer()), Type::arrow(mt, mt)), "\\x. Exp !x"},
            {"Pow_literal", pow_literal(), std::nullopt, "\\x. Exp x as printed; ill-typed"},
        };
    }();
    return entries;
}

const PreludeEntry* prelude_lookup(const std::string& name) {
    for (const auto& e : prelude())
        if (e.name == name) return &e;
    return nullptr;
}

Term with_prelude(const Term& t) {
    Term out = t;
    for (const auto& x : free_vars(t))
        if (const auto* e = prelude_lookup(x)) out = substitute(out, x, e->term);
    return out;
}

// ---------------------------------------------------------------------------
// Broken consistency

bool BrokenDemo::expected() const {
    if (mode == Mode::Strict) return branch_a && branch_b && !join.joined;
    return join.joined;
}

std::string BrokenDemo::str() const {
    std::ostringstream os;
    os << "mode " << mode_name(mode) << ", start " << start.str() << '\n';
    auto branch = [&](const char* label, const Term& end, const std::optional<std::vector<Reduct>>& path) {
        os << "branch " << label << " -> " << end.str() << ": ";
        if (!path) {
            os << "not reached\n";
            return;
        }
        os << path->size() << " steps\n";
        for (std::size_t k = 0; k < path->size(); ++k)
            os << "  " << (k + 1) << ". [" << rule_name((*path)[k].rule) << " @ " << position_str((*path)[k].pos)
               << "] " << (*path)[k].term.str() << '\n';
    };
    branch("A", end_a, branch_a);
    branch("B", end_b, branch_b);
    if (join.joined)
        os << "endpoints join at " << join.common->str() << '\n';
    else
        os << "endpoints do not join (" << join.expanded << " terms expanded)\n";
    return os.str();
}

BrokenDemo broken_demo(const Term& b, const Type& b_type, Mode mode, std::size_t fuel) {
    BrokenDemo d;
    d.mode = mode;
    Term y = yb(b, b_type);
    d.start = Term::sum({{Scalar::one(), y}, {Scalar(-1), y}});
    RewriteOptions opts{mode, Congruence::CallByValue, true};
    if (mode == Mode::Strict) {
        d.end_a = Term::zero();
        d.end_b = b;
    } else {
        d.end_a = Term::scal(Scalar::zero(), y);
        d.end_b = Term::sum({{Scalar::one(), b}, {Scalar::zero(), y}});
    }
    d.branch_a = find_path(d.start, d.end_a, opts, fuel);
    d.branch_b = find_path(d.start, d.end_b, opts, fuel);
    d.join = join(d.end_a, d.end_b, opts, fuel);
    return d;
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

void require_shared(const Term& t) {
    switch (t.kind()) {
    case Kind::Var:
    case Kind::Lam:
    case Kind::App:
    case Kind::Sum:
    case Kind::Scal:
    case Kind::Zero: return;
    default: throw UnsupportedConstruct("not in the shared grammar x | \\x.s | s t | s+t | 0 | a*s: " + t.str());
    }
}

template <class F>
Term map_linear(const Term& t, F rec) {
    if (t.is(Kind::Sum)) {
        auto es = t.entries();
        for (auto& e : es) e.base = rec(e.base);
        return Term::sum(std::move(es));
    }
    return Term::scal(t.coef(), rec(t.body()));
}

}  // namespace

Type enc_alg_type(const Type& a) {
    switch (a.kind()) {
    case TypeKind::Arrow: return Type::arrow(Type::monad(enc_alg_type(a.left())), enc_alg_type(a.right()));
    case TypeKind::Prod:
    case TypeKind::Monad: throw UnsupportedConstruct("source types are base types and arrows: " + a.str());
    default: return a;
    }
}

Type enc_lin_type(const Type& a) {
    switch (a.kind()) {
    case TypeKind::Arrow: return Type::arrow(enc_lin_type(a.left()), Type::monad(enc_lin_type(a.right())));
    case TypeKind::Prod:
    case TypeKind::Monad: throw UnsupportedConstruct("source types are base types and arrows: " + a.str());
    default: return a;
    }
}

Term enc_alg(const Term& t) {
    require_shared(t);
    switch (t.kind()) {
    case Kind::Var: return Term::cocanon(t);
    case Kind::Lam:
        return Term::lam(t.name(), t.annot() ? std::optional<Type>(Type::monad(enc_alg_type(*t.annot()))) : std::nullopt,
                         enc_alg(t.body()));
    case Kind::App: return Term::app(enc_alg(t.kid(0)), Term::canon(enc_alg(t.kid(1))));
    case Kind::Zero: return Term::zero(t.annot() ? std::optional<Type>(enc_alg_type(*t.annot())) : std::nullopt);
    default: return map_linear(t, [](const Term& s) { return enc_alg(s); });
    }
}

Term enc_lin(const Term& t) {
    require_shared(t);
    switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam:
        return Term::lam(t.name(), t.annot() ? std::optional<Type>(enc_lin_type(*t.annot())) : std::nullopt,
                         Term::canon(enc_lin(t.body())));
    case Kind::App: return Term::cocanon(Term::app(enc_lin(t.kid(0)), enc_lin(t.kid(1))));
    case Kind::Zero: return Term::zero(t.annot() ? std::optional<Type>(enc_lin_type(*t.annot())) : std::nullopt);
    default: return map_linear(t, [](const Term& s) { return enc_lin(s); });
    }
}

}  // namespace alc
