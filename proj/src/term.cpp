#include "alc/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace alc {

const char* mode_name(Mode m) { return m == Mode::Strict ? "strict" : "weak"; }

Term Term::make(Node n) { return Term(std::make_shared<const Node>(std::move(n))); }

Term Term::var(std::string name) { return make({Kind::Var, std::move(name), std::nullopt, {}, {}, {}}); }
Term Term::lam(std::string binder, std::optional<Type> annot, Term body) {
    return make({Kind::Lam, std::move(binder), std::move(annot), {}, {std::move(body)}, {}});
}
Term Term::app(Term fn, Term arg) { return make({Kind::App, "", std::nullopt, {}, {std::move(fn), std::move(arg)}, {}}); }
Term Term::pair(Term a, Term b) { return make({Kind::Pair, "", std::nullopt, {}, {std::move(a), std::move(b)}, {}}); }
Term Term::fst(Term t) { return make({Kind::Fst, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::snd(Term t) { return make({Kind::Snd, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::star() { return make({Kind::Star, "", std::nullopt, {}, {}, {}}); }

Term Term::sum(std::vector<Entry> entries) {
    Node n{Kind::Sum, "", std::nullopt, {}, {}, {}};
    for (auto& e : entries) {
        n.coefs.push_back(std::move(e.coef));
        n.kids.push_back(std::move(e.base));
    }
    return make(std::move(n));
}
Term Term::plus(Term a, Term b) { return sum({{Scalar::one(), std::move(a)}, {Scalar::one(), std::move(b)}}); }
Term Term::scal(Scalar coef, Term t) { return make({Kind::Scal, "", std::nullopt, std::move(coef), {std::move(t)}, {}}); }
Term Term::zero(std::optional<Type> annot) { return make({Kind::Zero, "", std::move(annot), {}, {}, {}}); }
Term Term::canon(Term t) { return make({Kind::Canon, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::cocanon(Term t) { return make({Kind::Cocanon, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::fix(Term t) { return make({Kind::Fix, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::tt() { return make({Kind::True, "", std::nullopt, {}, {}, {}}); }
Term Term::ff() { return make({Kind::False, "", std::nullopt, {}, {}, {}}); }
Term Term::ifz(Term c, Term a, Term b) {
    return make({Kind::If, "", std::nullopt, {}, {std::move(c), std::move(a), std::move(b)}, {}});
}
Term Term::nzero() { return make({Kind::NZero, "", std::nullopt, {}, {}, {}}); }
Term Term::succ(Term t) { return make({Kind::Succ, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::pred(Term t) { return make({Kind::Pred, "", std::nullopt, {}, {std::move(t)}, {}}); }
Term Term::iszero(Term t) { return make({Kind::IsZero, "", std::nullopt, {}, {std::move(t)}, {}}); }

Term Term::numeral(unsigned n) {
    Term t = nzero();
    for (unsigned i = 0; i < n; ++i) t = succ(t);
    return t;
}

std::vector<Term::Entry> Term::entries() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < kids().size(); ++i) out.push_back({coefs()[i], kids()[i]});
    return out;
}

Term Term::with_kids(std::vector<Term> kids) const {
    Node n = *node_;
    n.kids = std::move(kids);
    return make(std::move(n));
}

std::size_t Term::size() const {
    std::size_t n = 1;
    for (const auto& k : kids()) n += k.size();
    return n;
}

// ---------------------------------------------------------------------------
// Alpha-invariant ordering

namespace {

using Binders = std::vector<std::string>;

// Index from the innermost binder, or -1 when free.
long lookup(const Binders& bs, const std::string& x) {
    for (std::size_t i = bs.size(); i-- > 0;)
        if (bs[i] == x) return static_cast<long>(bs.size() - 1 - i);
    return -1;
}

std::strong_ordering cmp(const Term& a, Binders& ba, const Term& b, Binders& bb) {
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
    switch (a.kind()) {
    case Kind::Var: {
        long ia = lookup(ba, a.name()), ib = lookup(bb, b.name());
        if (ia >= 0 && ib >= 0) return ia <=> ib;
        if (ia >= 0) return std::strong_ordering::less;
        if (ib >= 0) return std::strong_ordering::greater;
        return a.name() <=> b.name();
    }
    case Kind::Lam: {
        ba.push_back(a.name());
        bb.push_back(b.name());
        auto c = cmp(a.body(), ba, b.body(), bb);
        ba.pop_back();
        bb.pop_back();
        return c;
    }
    case Kind::Scal:
        if (auto c = a.coef() <=> b.coef(); c != 0) return c;
        break;
    case Kind::Sum:
        if (auto c = a.kids().size() <=> b.kids().size(); c != 0) return c;
        for (std::size_t i = 0; i < a.kids().size(); ++i) {
            if (auto c = cmp(a.kid(i), ba, b.kid(i), bb); c != 0) return c;
            if (auto c = a.coefs()[i] <=> b.coefs()[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    default: break;
    }
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (auto c = cmp(a.kid(i), ba, b.kid(i), bb); c != 0) return c;
    return std::strong_ordering::equal;
}

void collect_free(const Term& t, Binders& bound, std::set<std::string>& out) {
    switch (t.kind()) {
    case Kind::Var:
        if (lookup(bound, t.name()) < 0) out.insert(t.name());
        return;
    case Kind::Lam:
        bound.push_back(t.name());
        collect_free(t.body(), bound, out);
        bound.pop_back();
        return;
    default:
        for (const auto& k : t.kids()) collect_free(k, bound, out);
    }
}

}  // namespace

std::strong_ordering compare(const Term& a, const Term& b) {
    if (a.same_node(b)) return std::strong_ordering::equal;
    Binders ba, bb;
    return cmp(a, ba, b, bb);
}

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> out;
    Binders bound;
    collect_free(t, bound, out);
    return out;
}

bool occurs_free(const std::string& x, const Term& t) {
    switch (t.kind()) {
    case Kind::Var: return t.name() == x;
    case Kind::Lam: return t.name() != x && occurs_free(x, t.body());
    default:
        for (const auto& k : t.kids())
            if (occurs_free(x, k)) return true;
        return false;
    }
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& avoid) {
    do {
        base += '\'';
    } while (avoid.count(base));
    return base;
}

Term subst(const Term& t, const std::string& x, const Term& v, const std::set<std::string>& fv_v) {
    switch (t.kind()) {
    case Kind::Var: return t.name() == x ? v : t;
    case Kind::Lam: {
        if (t.name() == x || !occurs_free(x, t.body())) return t;
        if (fv_v.count(t.name())) {
            std::set<std::string> avoid = fv_v;
            auto body_fv = free_vars(t.body());
            avoid.insert(body_fv.begin(), body_fv.end());
            avoid.insert(x);
            std::string y = fresh_name(t.name(), avoid);
            Term renamed = subst(t.body(), t.name(), Term::var(y), {y});
            return Term::lam(y, t.annot(), subst(renamed, x, v, fv_v));
        }
        return Term::lam(t.name(), t.annot(), subst(t.body(), x, v, fv_v));
    }
    default: {
        if (t.kids().empty()) return t;
        std::vector<Term> kids;
        kids.reserve(t.kids().size());
        for (const auto& k : t.kids()) kids.push_back(subst(k, x, v, fv_v));
        return t.with_kids(std::move(kids));
    }
    }
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& v) {
    return subst(t, x, v, free_vars(v));
}

// ---------------------------------------------------------------------------
// Predicates

bool is_linear_head(const Term& t) {
    return t.is(Kind::Sum) || t.is(Kind::Scal) || t.is(Kind::Zero);
}

bool is_value(const Term& t) {
    switch (t.kind()) {
    case Kind::Var:
    case Kind::Star:
    case Kind::Canon:
    case Kind::True:
    case Kind::False:
    case Kind::NZero: return true;
    // Abstractions are values unless a linearity rule fires on the body.
    case Kind::Lam: return !is_linear_head(t.body());
    // Value forms that are themselves redexes are excluded.
    case Kind::App: return is_value(t.kid(0)) && is_value(t.kid(1)) && !t.kid(0).is(Kind::Lam);
    case Kind::Pair: return is_value(t.kid(0)) && is_value(t.kid(1));
    case Kind::Fst:
    case Kind::Snd: return is_value(t.kid(0)) && !t.kid(0).is(Kind::Pair);
    case Kind::Succ: return is_value(t.kid(0));
    case Kind::Pred:
    case Kind::IsZero:
        return is_value(t.kid(0)) && !t.kid(0).is(Kind::NZero) && !t.kid(0).is(Kind::Succ);
    default: return false;
    }
}

bool is_value_combination(const Term& t) {
    for (const auto& e : linear_entries(canonical(t, Mode::Weak)))
        if (!is_value(e.base)) return false;
    return true;
}

bool contains_fix(const Term& t) {
    if (t.is(Kind::Fix)) return true;
    for (const auto& k : t.kids())
        if (contains_fix(k)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// AC-canonical form

std::vector<Term::Entry> linear_entries(const Term& t) {
    switch (t.kind()) {
    case Kind::Sum: return t.entries();
    case Kind::Scal: return {{t.coef(), t.body()}};
    case Kind::Zero: return {};
    default: return {{Scalar::one(), t}};
    }
}

Term from_entries(std::vector<Term::Entry> entries) {
    if (entries.empty()) return Term::zero();
    if (entries.size() == 1) {
        if (entries[0].coef.is_one()) return entries[0].base;
        return Term::scal(entries[0].coef, entries[0].base);
    }
    return Term::sum(std::move(entries));
}

namespace {

struct Canonicalizer {
    Mode mode;
    bool absorb_f;
    bool used_zero_rule = false;

    // Append coef * t (t already canonical) to out.
    void collect(const Term& t, const Scalar& coef, std::vector<Term::Entry>& out) {
        for (auto& e : linear_entries(t)) out.push_back({coef * e.coef, e.base});
    }

    Term run(const Term& t) {
        switch (t.kind()) {
        case Kind::Sum:
        case Kind::Scal:
        case Kind::Zero: {
            std::vector<Term::Entry> raw;
            if (t.is(Kind::Sum)) {
                for (std::size_t i = 0; i < t.kids().size(); ++i) collect(run(t.kid(i)), t.coefs()[i], raw);
            } else if (t.is(Kind::Scal)) {
                collect(run(t.body()), t.coef(), raw);
            } else {
                return t;
            }
            std::stable_sort(raw.begin(), raw.end(),
                             [](const Term::Entry& a, const Term::Entry& b) { return compare(a.base, b.base) < 0; });
            std::vector<Term::Entry> merged;
            for (auto& e : raw) {
                if (absorb_f && !merged.empty() && alpha_equal(merged.back().base, e.base))
                    merged.back().coef += e.coef;
                else
                    merged.push_back(e);
            }
            if (mode == Mode::Strict && absorb_f) {
                auto before = merged.size();
                std::erase_if(merged, [](const Term::Entry& e) { return e.coef.is_zero(); });
                if (merged.size() != before) used_zero_rule = true;
            }
            Term out = from_entries(std::move(merged));
            if (out.is(Kind::Zero) && t.is(Kind::Zero)) return t;
            return out;
        }
        default: {
            if (t.kids().empty()) return t;
            std::vector<Term> kids;
            kids.reserve(t.kids().size());
            bool changed = false;
            for (const auto& k : t.kids()) {
                kids.push_back(run(k));
                changed |= !kids.back().same_node(k);
            }
            return changed ? t.with_kids(std::move(kids)) : t;
        }
        }
    }
};

}  // namespace

namespace {

Term ac_normal(const Term& t) {
    if (!t.is(Kind::Sum)) {
        if (t.kids().empty()) return t;
        std::vector<Term> kids;
        for (const auto& k : t.kids()) kids.push_back(ac_normal(k));
        return t.with_kids(std::move(kids));
    }
    // 1*(a*s) as a summand is just how a*s is written inside a sum
    std::vector<Term::Entry> flat;
    for (const auto& e : t.entries()) {
        Term b = ac_normal(e.base);
        if (e.coef.is_one() && b.is(Kind::Sum)) {
            for (auto& inner : b.entries()) flat.push_back(inner);
        } else if (e.coef.is_one() && b.is(Kind::Scal)) {
            flat.push_back({b.coef(), b.body()});
        } else {
            flat.push_back({e.coef, b});
        }
    }
    std::stable_sort(flat.begin(), flat.end(), [](const Term::Entry& a, const Term::Entry& b) {
        auto c = compare(a.base, b.base);
        return c != 0 ? c < 0 : a.coef < b.coef;
    });
    if (flat.size() == 1) return flat[0].coef.is_one() ? flat[0].base : Term::scal(flat[0].coef, flat[0].base);
    return Term::sum(std::move(flat));
}

}  // namespace

bool ac_equal(const Term& a, const Term& b) { return alpha_equal(ac_normal(a), ac_normal(b)); }

Canonical canonicalize(const Term& t, Mode mode, bool absorb_f) {
    Canonicalizer c{mode, absorb_f};
    Term out = c.run(t);
    return {out, c.used_zero_rule};
}

// ---------------------------------------------------------------------------
// Termination measures

namespace {

using Big = boost::multiprecision::cpp_int;

Measure measure_entries(const std::vector<Term::Entry>& es, std::size_t from);

Measure measure_entry(const Term::Entry& e) {
    Measure m = measure(e.base);
    if (e.coef.is_one()) return m;
    return {2 * m.np, 1 + m.cx};
}

// Right-nested binary reading of an n-ary sum.
Measure measure_entries(const std::vector<Term::Entry>& es, std::size_t from) {
    if (from + 1 == es.size()) return measure_entry(es[from]);
    Measure head = measure_entry(es[from]);
    Measure rest = measure_entries(es, from + 1);
    return {1 + head.np + rest.np, 2 * head.np * rest.np};
}

}  // namespace

Measure measure(const Term& t) {
    switch (t.kind()) {
    case Kind::Var:
    case Kind::Star:
    case Kind::Zero:
    case Kind::True:
    case Kind::False:
    case Kind::NZero: return {1, 1};
    // [s] is not in the original grammar; it is measured like the other
    // unary constructs so that merges under it count.
    case Kind::Canon:
    case Kind::Lam:
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Cocanon:
    case Kind::Fix:
    case Kind::Succ:
    case Kind::Pred:
    case Kind::IsZero: {
        Measure m = measure(t.kid(0));
        return {2 * m.np, 2 * m.cx};
    }
    case Kind::Scal: {
        Measure m = measure(t.body());
        return {2 * m.np, 1 + m.cx};
    }
    case Kind::App:
    case Kind::Pair: {
        Big p = 2 * measure(t.kid(0)).np * measure(t.kid(1)).np;
        return {p, p};
    }
    case Kind::If: {
        Big p = 2 * measure(t.kid(0)).np * measure(t.kid(1)).np * measure(t.kid(2)).np;
        return {p, p};
    }
    case Kind::Sum: {
        auto es = t.entries();
        if (es.empty()) return {1, 1};
        return measure_entries(es, 0);
    }
    }
    throw std::logic_error("measure: unknown term kind");
}

}  // namespace alc
