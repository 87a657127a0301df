#include "alc/typing.hpp"

namespace alc {

Context Context::extended(std::string x, Type t) const {
    Context c = *this;
    c.push(std::move(x), std::move(t));
    return c;
}

std::optional<Type> Context::lookup(const std::string& x) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
        if (it->first == x) return it->second;
    return std::nullopt;
}

std::string Context::str() const {
    std::string s;
    for (std::size_t i = 0; i < bindings_.size(); ++i) {
        if (i) s += ", ";
        s += bindings_[i].first + " : " + bindings_[i].second.str();
    }
    return s;
}

TypeError::TypeError(Term subterm, std::string rule, std::string message)
    : std::runtime_error(message + " [rule " + rule + "] in " + subterm.str()),
      subterm_(std::move(subterm)), rule_(std::move(rule)) {}

std::string Judgment::str() const {
    return (ctx.empty() ? std::string() : ctx.str() + " ") + "|- " + term.str() + " : " + type.str();
}

namespace {

// Raised for lambdas without binder annotation in inference position.
struct NeedsAnnotation : TypeError {
    using TypeError::TypeError;
};

// Unannotated zero has every type; inside the checker it gets this wildcard.
const Type& hole() {
    static const Type h = Type::base("?");
    return h;
}

bool is_hole(const Type& t) { return t.kind() == TypeKind::Base && t.name() == "?"; }

bool has_hole(const Type& t) {
    switch (t.kind()) {
    case TypeKind::Base: return is_hole(t);
    case TypeKind::Arrow:
    case TypeKind::Prod: return has_hole(t.left()) || has_hole(t.right());
    case TypeKind::Monad: return has_hole(t.left());
    default: return false;
    }
}

bool compat(const Type& a, const Type& b) {
    if (is_hole(a) || is_hole(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TypeKind::Base: return a.name() == b.name();
    case TypeKind::Arrow:
    case TypeKind::Prod: return compat(a.left(), b.left()) && compat(a.right(), b.right());
    case TypeKind::Monad: return compat(a.left(), b.left());
    default: return true;
    }
}

// Prefer the more informative of two compatible types.
Type meet(const Type& a, const Type& b) {
    if (is_hole(a)) return b;
    if (is_hole(b)) return a;
    switch (a.kind()) {
    case TypeKind::Arrow: return Type::arrow(meet(a.left(), b.left()), meet(a.right(), b.right()));
    case TypeKind::Prod: return Type::prod(meet(a.left(), b.left()), meet(a.right(), b.right()));
    case TypeKind::Monad: return Type::monad(meet(a.left(), b.left()));
    default: return a;
    }
}

[[noreturn]] void mismatch(const Term& t, const char* rule, const Type& want, const Type& got) {
    throw TypeError(t, rule, "expected " + want.str() + " but found " + got.str());
}

Type infer_impl(const Context& ctx, const Term& t);
void check_impl(const Context& ctx, const Term& t, const Type& want);

// Operand of an eliminator: hole passes through, otherwise kind must match.
bool eliminable(const Term& t, const char* rule, const Type& got, TypeKind k, const char* what) {
    if (is_hole(got)) return false;
    if (got.kind() != k) throw TypeError(t, rule, std::string("expected ") + what + " but found " + got.str());
    return true;
}

Type infer_same(const Context& ctx, const Term& whole, const std::vector<Term>& parts, const char* rule) {
    std::optional<Type> found;
    for (const auto& p : parts) {
        try {
            Type ty = infer_impl(ctx, p);
            if (found && !compat(*found, ty)) mismatch(p, rule, *found, ty);
            found = found ? meet(*found, ty) : ty;
        } catch (const NeedsAnnotation&) {
        }
    }
    if (!found) throw NeedsAnnotation(whole, rule, "cannot infer the type; annotate the lambda binders");
    for (const auto& p : parts) check_impl(ctx, p, *found);
    return *found;
}

Type infer_impl(const Context& ctx, const Term& t) {
    switch (t.kind()) {
    case Kind::Var: {
        auto ty = ctx.lookup(t.name());
        if (!ty) throw TypeError(t, "var", "unbound variable " + t.name());
        return *ty;
    }
    case Kind::Star: return Type::top();
    case Kind::Zero: return t.annot() ? *t.annot() : hole();
    case Kind::Lam: {
        if (!t.annot()) throw NeedsAnnotation(t, "lam", "lambda binder " + t.name() + " needs a type annotation");
        Type cod = infer_impl(ctx.extended(t.name(), *t.annot()), t.body());
        return Type::arrow(*t.annot(), cod);
    }
    case Kind::App: {
        Type f = infer_impl(ctx, t.kid(0));
        if (!eliminable(t, "app", f, TypeKind::Arrow, "a function")) {
            try {
                infer_impl(ctx, t.kid(1));
            } catch (const NeedsAnnotation&) {
            }
            return hole();
        }
        check_impl(ctx, t.kid(1), f.left());
        return f.right();
    }
    case Kind::Pair: return Type::prod(infer_impl(ctx, t.kid(0)), infer_impl(ctx, t.kid(1)));
    case Kind::Fst:
    case Kind::Snd: {
        Type p = infer_impl(ctx, t.kid(0));
        const char* rule = t.is(Kind::Fst) ? "fst" : "snd";
        if (!eliminable(t, rule, p, TypeKind::Prod, "a product")) return hole();
        return t.is(Kind::Fst) ? p.left() : p.right();
    }
    case Kind::Sum: return infer_same(ctx, t, t.kids(), "sum");
    case Kind::Scal: return infer_impl(ctx, t.body());
    case Kind::Canon: return Type::monad(infer_impl(ctx, t.body()));
    case Kind::Cocanon: {
        Type m = infer_impl(ctx, t.body());
        if (!eliminable(t, "cocanon", m, TypeKind::Monad, "M A")) return hole();
        return m.left();
    }
    case Kind::Fix: {
        Type f = infer_impl(ctx, t.body());
        if (!eliminable(t, "Y", f, TypeKind::Arrow, "M A -> M A")) return hole();
        if (!(is_hole(f.left()) || f.left().is_monad()) || !compat(f.left(), f.right()))
            throw TypeError(t, "Y", "fixpoint argument must have type M A -> M A, found " + f.str());
        Type m = meet(f.left(), f.right());
        return is_hole(m) ? hole() : m.left();
    }
    case Kind::True:
    case Kind::False: return Type::bit();
    case Kind::NZero: return Type::integer();
    case Kind::Succ:
    case Kind::Pred:
        check_impl(ctx, t.body(), Type::integer());
        return Type::integer();
    case Kind::IsZero:
        check_impl(ctx, t.body(), Type::integer());
        return Type::bit();
    case Kind::If:
        check_impl(ctx, t.kid(0), Type::bit());
        return infer_same(ctx, t, {t.kid(1), t.kid(2)}, "if");
    }
    throw TypeError(t, "?", "unknown term");
}

void check_impl(const Context& ctx, const Term& t, const Type& want) {
    if (is_hole(want)) {
        try {
            infer_impl(ctx, t);
        } catch (const NeedsAnnotation&) {
        }
        return;
    }
    switch (t.kind()) {
    case Kind::Zero:
        if (t.annot() && !compat(*t.annot(), want)) mismatch(t, "zero", want, *t.annot());
        return;
    case Kind::Lam: {
        if (!want.is_arrow()) throw TypeError(t, "lam", "expected " + want.str() + " but found a function");
        if (t.annot() && !compat(*t.annot(), want.left())) mismatch(t, "lam", want.left(), *t.annot());
        check_impl(ctx.extended(t.name(), t.annot() ? meet(*t.annot(), want.left()) : want.left()), t.body(),
                   want.right());
        return;
    }
    case Kind::App: {
        // Lets the function side be checked when only the argument infers.
        std::optional<Type> arg;
        try {
            arg = infer_impl(ctx, t.kid(1));
        } catch (const NeedsAnnotation&) {
        }
        if (arg) {
            check_impl(ctx, t.kid(0), Type::arrow(*arg, want));
            return;
        }
        break;
    }
    case Kind::Sum:
        for (const auto& k : t.kids()) check_impl(ctx, k, want);
        return;
    case Kind::Scal: check_impl(ctx, t.body(), want); return;
    case Kind::Canon:
        if (!want.is_monad()) throw TypeError(t, "canon", "expected " + want.str() + " but found M _");
        check_impl(ctx, t.body(), want.left());
        return;
    case Kind::Cocanon: check_impl(ctx, t.body(), Type::monad(want)); return;
    case Kind::Pair:
        if (want.kind() != TypeKind::Prod) throw TypeError(t, "pair", "expected " + want.str() + " but found a pair");
        check_impl(ctx, t.kid(0), want.left());
        check_impl(ctx, t.kid(1), want.right());
        return;
    case Kind::Fix: check_impl(ctx, t.body(), Type::arrow(Type::monad(want), Type::monad(want))); return;
    case Kind::If:
        check_impl(ctx, t.kid(0), Type::bit());
        check_impl(ctx, t.kid(1), want);
        check_impl(ctx, t.kid(2), want);
        return;
    default: break;
    }
    Type got = infer_impl(ctx, t);
    if (!compat(got, want)) mismatch(t, "conv", want, got);
}

Type infer_closed(const Context& ctx, const Term& t) {
    Type ty = infer_impl(ctx, t);
    if (has_hole(ty)) throw TypeError(t, "zero", "cannot infer the type of zero; add an ascription (zero : A)");
    return ty;
}

}  // namespace

Type infer(const Context& ctx, const Term& t) { return infer_closed(ctx, t); }
void check(const Context& ctx, const Term& t, const Type& expected) { check_impl(ctx, t, expected); }

std::optional<Type> try_infer(const Context& ctx, const Term& t) {
    try {
        return infer_closed(ctx, t);
    } catch (const TypeError&) {
        return std::nullopt;
    }
}

bool has_type(const Context& ctx, const Term& t, const Type& expected) {
    try {
        check_impl(ctx, t, expected);
        return true;
    } catch (const TypeError&) {
        return false;
    }
}

bool check_subject_reduction(const Judgment& j, const Term& reduct) { return has_type(j.ctx, reduct, j.type); }

}  // namespace alc
