#include "alc/semantics.hpp"

#include <set>
#include <stdexcept>

namespace alc {

const char* model_name(Model m) { return m == Model::Strong ? "strong" : "weak"; }

// ---------------------------------------------------------------------------
// Coefficients

Coef Coef::omega() {
    Coef c;
    c.omega_ = true;
    return c;
}

Coef operator+(const Coef& a, const Coef& b) {
    if (a.omega_ || b.omega_) return Coef::omega();
    return Coef(a.value_ + b.value_);
}

Coef operator*(const Coef& a, const Coef& b) {
    if (a.omega_ || b.omega_) return Coef::omega();
    return Coef(a.value_ * b.value_);
}

std::strong_ordering Coef::operator<=>(const Coef& o) const {
    if (omega_ != o.omega_) return omega_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (omega_) return std::strong_ordering::equal;
    return value_ <=> o.value_;
}

std::string Coef::str() const { return omega_ ? "ω" : value_.str(); }

// ---------------------------------------------------------------------------
// Semantic values

struct SemValue::Node {
    Kind kind;
    bool b = false;
    std::uint64_t n = 0;
    std::vector<SemValue> kids = {};
    std::optional<Term> lam = std::nullopt;
    Env env = {};
    std::shared_ptr<const ModuleElement> elem = nullptr;
    std::string text = {};
};

namespace {

template <class T>
std::strong_ordering cmp3(const T& a, const T& b) {
    return a < b ? std::strong_ordering::less : b < a ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

SemValue SemValue::unit() {
    static const SemValue u(std::make_shared<const Node>(Node{Kind::Unit}));
    return u;
}

SemValue SemValue::boolean(bool b) {
    Node n{Kind::Bool};
    n.b = b;
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::integer(std::uint64_t v) {
    Node n{Kind::Int};
    n.n = v;
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::pair(SemValue a, SemValue b) {
    Node n{Kind::Pair};
    n.kids = {std::move(a), std::move(b)};
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::closure(Term lam, const Env& env) {
    Node n{Kind::Closure};
    for (const auto& x : free_vars(lam)) {
        auto it = env.find(x);
        if (it != env.end()) n.env.insert(*it);
    }
    n.lam = std::move(lam);
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::module(ModuleElement m) {
    Node n{Kind::Module};
    n.elem = std::make_shared<const ModuleElement>(std::move(m));
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::fix_thunk(SemValue v) {
    Node n{Kind::Thunk};
    n.kids = {std::move(v)};
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue SemValue::atom(std::string text) {
    Node n{Kind::Atom};
    n.text = std::move(text);
    return SemValue(std::make_shared<const Node>(std::move(n)));
}

SemValue::Kind SemValue::kind() const { return node_->kind; }
bool SemValue::as_bool() const { return node_->b; }
std::uint64_t SemValue::as_int() const { return node_->n; }
const SemValue& SemValue::first() const { return node_->kids.at(0); }
const SemValue& SemValue::second() const { return node_->kids.at(1); }
const Term& SemValue::lam() const { return *node_->lam; }
const Env& SemValue::env() const { return node_->env; }
const ModuleElement& SemValue::element() const { return *node_->elem; }
const SemValue& SemValue::fixed() const { return node_->kids.at(0); }
const std::string& SemValue::text() const { return node_->text; }

std::strong_ordering SemValue::operator<=>(const SemValue& o) const {
    if (node_ == o.node_) return std::strong_ordering::equal;
    if (auto c = cmp3(static_cast<int>(kind()), static_cast<int>(o.kind())); c != 0) return c;
    switch (kind()) {
    case Kind::Unit: return std::strong_ordering::equal;
    case Kind::Bool: return cmp3(node_->b, o.node_->b);
    case Kind::Int: return cmp3(node_->n, o.node_->n);
    case Kind::Pair:
        if (auto c = first() <=> o.first(); c != 0) return c;
        return second() <=> o.second();
    case Kind::Closure: {
        if (auto c = compare(lam(), o.lam()); c != 0) return c;
        if (auto c = cmp3(env().size(), o.env().size()); c != 0) return c;
        for (auto a = env().begin(), b = o.env().begin(); a != env().end(); ++a, ++b) {
            if (auto c = a->first <=> b->first; c != 0) return c;
            if (auto c = a->second <=> b->second; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    case Kind::Module: return element() <=> o.element();
    case Kind::Thunk: return fixed() <=> o.fixed();
    case Kind::Atom: return text() <=> o.text();
    }
    return std::strong_ordering::equal;
}

std::string SemValue::str() const {
    switch (kind()) {
    case Kind::Unit: return "*";
    case Kind::Bool: return node_->b ? "tt" : "ff";
    case Kind::Int: return std::to_string(node_->n);
    case Kind::Pair: return "<" + first().str() + ", " + second().str() + ">";
    case Kind::Closure: return "<fun " + lam().str() + ">";
    case Kind::Module: return "[" + element().str() + "]";
    case Kind::Thunk: return "[Y " + fixed().str() + "]";
    case Kind::Atom: return text();
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Module elements

ModuleElement ModuleElement::zero(Model m) {
    ModuleElement e;
    e.model_ = m;
    return e;
}

ModuleElement ModuleElement::bottom() {
    ModuleElement e;
    e.bottom_ = true;
    return e;
}

ModuleElement ModuleElement::unit(Model m, const SemValue& v) {
    ModuleElement e = zero(m);
    e.entries_.emplace(v, Coef(Scalar::one()));
    return e;
}

ModuleElement ModuleElement::constant(const Coef& c) {
    ModuleElement e = zero(Model::Weak);
    e.otherwise_ = c;
    return e;
}

Coef ModuleElement::at(const SemValue& x) const {
    if (bottom_) return Coef::omega();
    auto it = entries_.find(x);
    return it == entries_.end() ? otherwise_ : it->second;
}

void ModuleElement::set(const SemValue& x, const Coef& c) { entries_.insert_or_assign(x, c); }

void ModuleElement::add_at(const SemValue& x, const Coef& c) {
    auto [it, fresh] = entries_.emplace(x, otherwise_ + c);
    if (!fresh) it->second = it->second + c;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    if (bottom_ || o.bottom_) return bottom();
    ModuleElement r = *this;
    for (const auto& [x, c] : o.entries_) {
        auto it = r.entries_.find(x);
        if (it == r.entries_.end())
            r.entries_.emplace(x, otherwise_ + c);
        else
            it->second = it->second + c;
    }
    // points only in *this also pick up o's default
    if (!o.otherwise_.is_zero())
        for (auto& [x, c] : r.entries_)
            if (!o.entries_.count(x)) c = c + o.otherwise_;
    r.otherwise_ = otherwise_ + o.otherwise_;
    return r;
}

ModuleElement ModuleElement::scaled(const Coef& c) const {
    if (bottom_) return bottom();
    ModuleElement r = *this;
    for (auto& [x, k] : r.entries_) k = c * k;
    r.otherwise_ = c * otherwise_;
    return r;
}

ModuleElement ModuleElement::bind(const std::function<ModuleElement(const SemValue&)>& f) const {
    if (bottom_) return bottom();
    // infinitely many points with a nonzero weight
    if (!otherwise_.is_zero()) return constant(Coef::omega());
    ModuleElement r = zero(model_);
    for (const auto& [x, c] : entries_) {
        ModuleElement fx = f(x);
        if (fx.bottom_) return bottom();
        r = r + fx.scaled(c);
    }
    return r;
}

ModuleElement ModuleElement::without_zeros() const {
    if (bottom_ || !otherwise_.is_zero()) return *this;
    ModuleElement r = *this;
    std::erase_if(r.entries_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (bottom_ || o.bottom_) return bottom_ == o.bottom_;
    if (model_ != o.model_) return false;
    if (model_ == Model::Strong) return entries_ == o.entries_;
    if (!(otherwise_ == o.otherwise_)) return false;
    for (const auto& [x, c] : entries_)
        if (!(o.at(x) == c)) return false;
    for (const auto& [x, c] : o.entries_)
        if (!(at(x) == c)) return false;
    return true;
}

std::strong_ordering ModuleElement::operator<=>(const ModuleElement& o) const {
    if (auto c = cmp3(static_cast<int>(model_), static_cast<int>(o.model_)); c != 0) return c;
    if (auto c = cmp3(o.bottom_, bottom_); c != 0) return c;
    if (auto c = cmp3(entries_.size(), o.entries_.size()); c != 0) return c;
    for (auto a = entries_.begin(), b = o.entries_.begin(); a != entries_.end(); ++a, ++b) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (auto c = a->second <=> b->second; c != 0) return c;
    }
    return otherwise_ <=> o.otherwise_;
}

std::string ModuleElement::str() const {
    if (bottom_) return "⊥";
    if (entries_.empty() && otherwise_.is_zero()) return "0";
    std::string s = "{";
    bool first = true;
    for (const auto& [x, c] : entries_) {
        if (!first) s += ", ";
        first = false;
        s += x.str() + " -> " + c.str();
    }
    if (!otherwise_.is_zero()) s += std::string(first ? "" : " | ") + "else " + otherwise_.str();
    return s + "}";
}

std::string Denotation::str() const { return element.str() + (approximate ? " (approximate)" : ""); }

// ---------------------------------------------------------------------------
// Fixpoints

ModuleElement fix_strong(const std::function<ModuleElement(const ModuleElement&)>& f, std::size_t bound,
                         bool* approximate) {
    ModuleElement m = ModuleElement::bottom();
    for (std::size_t i = 0; i < bound; ++i) {
        ModuleElement next = f(m);
        if (next == m) return m;
        m = std::move(next);
    }
    if (approximate) *approximate = true;
    return ModuleElement::bottom();
}

ModuleElement fix_weak(const std::function<ModuleElement(const ModuleElement&)>& f, std::size_t bound,
                       bool* approximate) {
    ModuleElement prev = ModuleElement::zero(Model::Weak);
    ModuleElement cur = f(prev);
    for (std::size_t i = 1; i < bound && !(cur == prev); ++i) {
        prev = cur;
        cur = f(prev);
    }
    if (cur == prev) return cur;
    if (approximate) *approximate = true;
    // Pointwise: keep what stopped moving, omega elsewhere.
    ModuleElement r = ModuleElement::constant(cur.otherwise() == prev.otherwise() ? cur.otherwise() : Coef::omega());
    for (const auto& kv : cur.entries()) r.set(kv.first, kv.second == prev.at(kv.first) ? kv.second : Coef::omega());
    for (const auto& kv : prev.entries())
        if (!cur.entries().count(kv.first)) r.set(kv.first, kv.second == cur.at(kv.first) ? kv.second : Coef::omega());
    return r;
}

ModuleElement strength(const SemValue& a, const ModuleElement& m) {
    return m.bind([&](const SemValue& b) { return ModuleElement::unit(m.model(), SemValue::pair(a, b)); });
}

// ---------------------------------------------------------------------------
// Interpretation

namespace {

struct OutOfFuel {};

// A fixpoint unfolded too deep; caught by its outermost frame.
struct Unfolded {
    SemValue key;
};

class Evaluator {
public:
    explicit Evaluator(const SemOptions& o) : o_(o) {}

    bool approximate = false;

    ModuleElement comp(const Env& env, const Term& t) {
        if (++steps_ > o_.fuel) throw OutOfFuel{};
        switch (t.kind()) {
        case Kind::Var: {
            auto it = env.find(t.name());
            return unit(it != env.end() ? it->second : SemValue::atom(t.name()));
        }
        case Kind::Star: return unit(SemValue::unit());
        case Kind::True: return unit(SemValue::boolean(true));
        case Kind::False: return unit(SemValue::boolean(false));
        case Kind::NZero: return unit(SemValue::integer(0));
        case Kind::Zero: return ModuleElement::zero(o_.model);
        case Kind::Lam: {
            // A linear body distributes, as the abstraction rules do.
            Term body = canonical(t.body(), o_.mode);
            if (!is_linear_head(body)) return unit(SemValue::closure(Term::lam(t.name(), t.annot(), body), env));
            ModuleElement r = ModuleElement::zero(o_.model);
            for (const auto& e : linear_entries(body))
                r = r + comp(env, Term::lam(t.name(), t.annot(), e.base)).scaled(Coef(e.coef));
            return norm(r);
        }
        case Kind::App:
            return comp(env, t.kid(0)).bind([&](const SemValue& f) {
                return comp(env, t.kid(1)).bind([&](const SemValue& a) { return apply(f, a); });
            });
        case Kind::Pair:
            return comp(env, t.kid(0)).bind([&](const SemValue& a) {
                return comp(env, t.kid(1)).bind([&](const SemValue& b) { return unit(SemValue::pair(a, b)); });
            });
        case Kind::Fst:
        case Kind::Snd: {
            bool first = t.is(Kind::Fst);
            return comp(env, t.body()).bind([&](const SemValue& p) {
                if (p.kind() != SemValue::Kind::Pair) return unit(SemValue::atom((first ? "fst " : "snd ") + p.str()));
                return unit(first ? p.first() : p.second());
            });
        }
        case Kind::Sum: {
            ModuleElement r = ModuleElement::zero(o_.model);
            for (std::size_t i = 0; i < t.kids().size(); ++i)
                r = r + comp(env, t.kid(i)).scaled(Coef(t.coefs()[i]));
            return norm(r);
        }
        case Kind::Scal: return norm(comp(env, t.body()).scaled(Coef(t.coef())));
        case Kind::Canon: return unit(SemValue::module(comp(env, t.body())));
        case Kind::Cocanon:
            return comp(env, t.body()).bind([&](const SemValue& m) { return force(m); });
        case Kind::Fix:
            return comp(env, t.body()).bind([&](const SemValue& v) { return fix(v); });
        case Kind::If:
            return comp(env, t.kid(0)).bind([&](const SemValue& b) {
                if (b.kind() != SemValue::Kind::Bool) return unit(SemValue::atom("if " + b.str()));
                return comp(env, t.kid(b.as_bool() ? 1 : 2));
            });
        case Kind::Succ:
        case Kind::Pred:
        case Kind::IsZero: {
            Kind k = t.kind();
            return comp(env, t.body()).bind([&](const SemValue& n) {
                if (n.kind() != SemValue::Kind::Int) {
                    const char* op = k == Kind::Succ ? "succ " : k == Kind::Pred ? "pred " : "iszero ";
                    return unit(SemValue::atom(op + n.str()));
                }
                std::uint64_t v = n.as_int();
                if (k == Kind::Succ) return unit(SemValue::integer(v + 1));
                if (k == Kind::Pred) return unit(SemValue::integer(v == 0 ? 0 : v - 1));
                return unit(SemValue::boolean(v == 0));
            });
        }
        }
        throw std::logic_error("denote: unknown term kind");
    }

    ModuleElement fail_value() const {
        return o_.model == Model::Strong ? ModuleElement::bottom() : ModuleElement::constant(Coef::omega());
    }

private:
    ModuleElement unit(const SemValue& v) const { return ModuleElement::unit(o_.model, v); }
    ModuleElement norm(ModuleElement m) const { return o_.mode == Mode::Strict ? m.without_zeros() : m; }

    ModuleElement apply(const SemValue& f, const SemValue& a) {
        if (f.kind() != SemValue::Kind::Closure) return unit(SemValue::atom("(" + f.str() + " " + a.str() + ")"));
        Env e = f.env();
        e.insert_or_assign(f.lam().name(), a);
        return comp(e, f.lam().body());
    }

    ModuleElement force(const SemValue& m) {
        switch (m.kind()) {
        case SemValue::Kind::Module: return m.element();
        case SemValue::Kind::Thunk: return fix(m.fixed());
        default: return unit(SemValue::atom("!" + m.str()));
        }
    }

    // One round of v applied to the frozen m, then forced.
    ModuleElement round(const SemValue& v, const SemValue& m) {
        return norm(apply(v, m).bind([&](const SemValue& r) { return force(r); }));
    }

    // Unfold lazily; a fixpoint that keeps unfolding is computed as a limit.
    ModuleElement fix(const SemValue& v) {
        if (v.kind() != SemValue::Kind::Closure) return unit(SemValue::atom("Y(" + v.str() + ")"));
        auto it = depth_.emplace(v, 0).first;
        if (it->second >= o_.unfold_depth) throw Unfolded{v};
        ++it->second;
        try {
            ModuleElement r = round(v, SemValue::fix_thunk(v));
            --it->second;
            return r;
        } catch (const Unfolded& u) {
            --it->second;
            if (!(u.key == v) || it->second != 0) throw;
        } catch (...) {
            --it->second;
            throw;
        }
        auto f = [&](const ModuleElement& m) { return round(v, SemValue::module(m)); };
        bool approx = false;
        ModuleElement r = o_.model == Model::Strong ? fix_strong(f, o_.fix_bound, &approx)
                                                    : fix_weak(f, o_.fix_bound, &approx);
        approximate |= approx;
        return r;
    }

    SemOptions o_;
    std::size_t steps_ = 0;
    std::map<SemValue, std::size_t, SemLess> depth_;
};

bool first_order(const SemValue& v) {
    switch (v.kind()) {
    case SemValue::Kind::Unit:
    case SemValue::Kind::Bool:
    case SemValue::Kind::Int:
    case SemValue::Kind::Atom: return true;
    case SemValue::Kind::Pair: return first_order(v.first()) && first_order(v.second());
    case SemValue::Kind::Module: {
        for (const auto& kv : v.element().entries())
            if (!first_order(kv.first)) return false;
        return true;
    }
    default: return false;
    }
}

bool first_order(const ModuleElement& m) {
    for (const auto& kv : m.entries())
        if (!first_order(kv.first)) return false;
    return true;
}

}  // namespace

Denotation denote_computation(const Env& env, const Term& t, const SemOptions& opts) {
    Evaluator ev(opts);
    try {
        ModuleElement m = ev.comp(env, t);
        return {std::move(m), ev.approximate};
    } catch (const OutOfFuel&) {
        return {ev.fail_value(), true};
    }
}

SemValue denote_value(const Env& env, const Term& t, const SemOptions& opts) {
    Denotation d = denote_computation(env, t, opts);
    const auto& es = d.element.entries();
    if (d.element.is_bottom() || es.size() != 1 || !es.begin()->second.value().is_one() ||
        es.begin()->second.is_omega() || !d.element.otherwise().is_zero())
        throw std::runtime_error("not a value: " + t.str() + " denotes " + d.str());
    return es.begin()->first;
}

std::optional<SemValue> parse_point(const std::string& s) {
    if (s == "*") return SemValue::unit();
    if (s == "tt") return SemValue::boolean(true);
    if (s == "ff") return SemValue::boolean(false);
    std::string digits = (s.size() > 1 && s[0] == 'n') ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    try {
        return SemValue::integer(std::stoull(digits));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

SoundnessReport soundness_check(const Trace& trace, const Env& env, const SemOptions& opts) {
    SoundnessReport rep;
    Denotation d0 = denote_computation(env, trace.initial, opts);
    if (d0.approximate || !first_order(d0.element)) return rep;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        Denotation dk = denote_computation(env, trace.steps[k].term, opts);
        if (dk.approximate) continue;
        ++rep.checked;
        if (!(dk.element == d0.element)) {
            ++rep.mismatches;
            rep.details.push_back("step " + std::to_string(k + 1) + " [" + rule_name(trace.steps[k].rule) + "] " +
                                  trace.steps[k].term.str() + " denotes " + dk.element.str() + " but source denotes " +
                                  d0.element.str());
        }
    }
    return rep;
}

SoundnessReport soundness_check(const Term& t, const Env& env, const SemOptions& opts, std::size_t steps) {
    return soundness_check(normalize(t, {opts.mode}, steps), env, opts);
}

}  // namespace alc
