#include "alc/equational.hpp"

namespace alc {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

struct PostPass {
    bool changed = false;

    Term run(const Context& ctx, const Term& t) {
        Term cur = t;
        if (!cur.kids().empty()) {
            std::vector<Term> kids;
            bool moved = false;
            for (std::size_t i = 0; i < cur.kids().size(); ++i) {
                Context inner = ctx;
                if (cur.is(Kind::Lam) && cur.annot()) inner.push(cur.name(), *cur.annot());
                kids.push_back(run(inner, cur.kid(i)));
                moved |= !kids.back().same_node(cur.kid(i));
            }
            if (moved) cur = cur.with_kids(std::move(kids));
        }
        return contract(ctx, cur);
    }

    Term contract(const Context& ctx, const Term& t) {
        // \x. u x  ~>  u
        if (t.is(Kind::Lam) && t.body().is(Kind::App)) {
            const Term& fn = t.body().kid(0);
            const Term& arg = t.body().kid(1);
            if (arg.is(Kind::Var) && arg.name() == t.name() && is_value(fn) && !occurs_free(t.name(), fn))
                return hit(fn);
        }
        // <fst u, snd u>  ~>  u
        if (t.is(Kind::Pair) && t.kid(0).is(Kind::Fst) && t.kid(1).is(Kind::Snd) &&
            alpha_equal(t.kid(0).body(), t.kid(1).body()) && is_value(t.kid(0).body()))
            return hit(t.kid(0).body());
        // [!u]  ~>  u
        if (t.is(Kind::Canon) && t.body().is(Kind::Cocanon) && is_value(t.body().body())) return hit(t.body().body());
        // values of type T are star
        if (!t.is(Kind::Star) && is_value(t)) {
            auto ty = try_infer(ctx, t);
            if (ty && ty->kind() == TypeKind::Top) return hit(Term::star());
        }
        return t;
    }

    Term hit(Term t) {
        changed = true;
        return t;
    }
};

// First-order answers: no abstraction and nothing stuck on a variable.
bool is_answer(const Term& t) {
    switch (t.kind()) {
    case Kind::Var:
    case Kind::Star:
    case Kind::True:
    case Kind::False:
    case Kind::NZero:
    case Kind::Zero: return true;
    case Kind::Succ:
    case Kind::Pair:
    case Kind::Canon:
    case Kind::Sum:
    case Kind::Scal:
        for (const auto& k : t.kids())
            if (!is_answer(k)) return false;
        return true;
    default: return false;
    }
}

RewriteOptions full(Mode mode) { return {mode, Congruence::Full, false}; }

}  // namespace

Term post_normalize(const Context& ctx, const Term& t, Mode mode, std::size_t fuel) {
    Term cur = canonical(t, mode);
    for (int round = 0; round < 16; ++round) {
        PostPass p;
        Term next = canonical(p.run(ctx, cur), mode);
        if (!p.changed) return cur;
        Trace tr = normalize(next, full(mode), fuel);
        cur = canonical(tr.result(), mode);
    }
    return cur;
}

EqVerdict ax_equiv(const Context& ctx, const Term& s, const Term& t, const Type& ty, Mode mode, std::size_t fuel) {
    check(ctx, s, ty);
    check(ctx, t, ty);
    EqVerdict v;
    v.left = normalize(s, full(mode), fuel);
    v.right = normalize(t, full(mode), fuel);
    v.left_form = post_normalize(ctx, v.left.result(), mode, fuel);
    v.right_form = post_normalize(ctx, v.right.result(), mode, fuel);
    if (alpha_equal(v.left_form, v.right_form)) {
        v.verdict = Verdict::Equal;
        v.reason = "common form " + v.left_form.str();
        return v;
    }
    if (!v.left.normal() || !v.right.normal()) {
        v.reason = "fuel exhausted before a normal form";
        return v;
    }
    if (ty.is_observable() && is_answer(v.left_form) && is_answer(v.right_form)) {
        v.verdict = Verdict::NotEqual;
        v.reason = "distinct normal forms " + v.left_form.str() + " and " + v.right_form.str();
        return v;
    }
    v.reason = "distinct normal forms outside the decidable fragment";
    return v;
}

AxiomReport check_commuting_axioms(const std::vector<AxiomInstance>& corpus, Mode mode, std::size_t fuel) {
    AxiomReport r;
    for (const auto& inst : corpus) {
        EqVerdict v = ax_equiv(inst.ctx, inst.lhs, inst.rhs, inst.type, mode, fuel);
        switch (v.verdict) {
        case Verdict::Equal: ++r.equal; break;
        case Verdict::Unknown:
            ++r.unknown;
            r.log.push_back("needs axiom " + inst.schema + ": " + inst.lhs.str() + " vs " + inst.rhs.str());
            break;
        case Verdict::NotEqual:
            ++r.refuted;
            r.log.push_back("REFUTED " + inst.schema + ": " + v.reason);
            break;
        }
    }
    return r;
}

}  // namespace alc
