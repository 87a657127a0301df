#include "alc/rewrite.hpp"

#include <array>
#include <deque>
#include <map>
#include <sstream>

namespace alc {

namespace {

constexpr std::array<const char*, 52> kRuleNames = {
    "EF",     "EF*",    "F",        "E*",       "A1",       "A2",     "A3",     "A4",     "A5",       "A6",
    "A7",     "A8",     "A9",       "A10",      "A11",      "A12",    "AP1",    "AP2",    "AP3",      "AFst1",
    "AFst2",  "AFst3",  "ASnd1",    "ASnd2",    "ASnd3",    "AY1",    "AY2",    "AY3",    "ASucc1",   "ASucc2",
    "ASucc3", "APred1", "APred2",   "APred3",   "AIsZero1", "AIsZero2", "AIsZero3", "AIf1", "AIf2",   "AIf3",
    "B1",     "B2",     "Bproj1",   "Bproj2",   "BY",       "Bpredsucc", "Bpred0", "Biszero0", "BiszeroS", "BifTT",
    "BifFF",  nullptr};

RuleId offset(RuleId base, int k) { return static_cast<RuleId>(static_cast<int>(base) + k); }

// 0 for a sum, 1 for a scalar multiple, 2 for zero.
int linear_shape(const Term& t) { return t.is(Kind::Sum) ? 0 : t.is(Kind::Scal) ? 1 : 2; }

template <class F>
Term distribute(const Term& lin, F wrap) {
    if (lin.is(Kind::Zero)) return Term::zero();
    auto es = linear_entries(lin);
    for (auto& e : es) e.base = wrap(e.base);
    if (es.size() == 1) return Term::scal(es[0].coef, es[0].base);
    return Term::sum(std::move(es));
}

struct Local {
    RuleId rule;
    Term term;
};

std::vector<Local> root_rules(const Term& t, const RewriteOptions& opts) {
    std::vector<Local> out;
    auto lin = [&](RuleId base, const Term& head, auto wrap) {
        out.push_back({offset(base, linear_shape(head)), distribute(head, wrap)});
    };
    switch (t.kind()) {
    case Kind::App: {
        const Term& f = t.kid(0);
        const Term& a = t.kid(1);
        if (is_linear_head(f)) lin(RuleId::A1, f, [&](const Term& b) { return Term::app(b, a); });
        if (is_linear_head(a)) lin(RuleId::A4, a, [&](const Term& b) { return Term::app(f, b); });
        if (f.is(Kind::Lam) && is_value(a)) out.push_back({RuleId::B1, substitute(f.body(), f.name(), a)});
        break;
    }
    case Kind::Lam:
        if (is_linear_head(t.body()))
            lin(RuleId::A7, t.body(), [&](const Term& b) { return Term::lam(t.name(), t.annot(), b); });
        break;
    case Kind::Cocanon:
        if (is_linear_head(t.body())) lin(RuleId::A10, t.body(), [](const Term& b) { return Term::cocanon(b); });
        if (t.body().is(Kind::Canon)) out.push_back({RuleId::B2, t.body().body()});
        break;
    case Kind::Pair: {
        const Term& l = t.kid(0);
        const Term& r = t.kid(1);
        if (is_linear_head(l)) lin(RuleId::AP1, l, [&](const Term& b) { return Term::pair(b, r); });
        if (is_linear_head(r)) lin(RuleId::AP1, r, [&](const Term& b) { return Term::pair(l, b); });
        break;
    }
    case Kind::Fst:
    case Kind::Snd: {
        bool first = t.is(Kind::Fst);
        const Term& p = t.body();
        if (is_linear_head(p))
            lin(first ? RuleId::AFst1 : RuleId::ASnd1, p,
                [&](const Term& b) { return first ? Term::fst(b) : Term::snd(b); });
        if (p.is(Kind::Pair) && is_value(p.kid(0)) && is_value(p.kid(1)))
            out.push_back({first ? RuleId::Bproj1 : RuleId::Bproj2, p.kid(first ? 0 : 1)});
        break;
    }
    case Kind::Fix:
        if (is_linear_head(t.body())) lin(RuleId::AY1, t.body(), [](const Term& b) { return Term::fix(b); });
        if (is_value(t.body()))
            out.push_back({RuleId::BY, Term::cocanon(Term::app(t.body(), Term::canon(t)))});
        break;
    case Kind::Succ:
        if (is_linear_head(t.body())) lin(RuleId::ASucc1, t.body(), [](const Term& b) { return Term::succ(b); });
        break;
    case Kind::Pred:
        if (is_linear_head(t.body())) lin(RuleId::APred1, t.body(), [](const Term& b) { return Term::pred(b); });
        if (t.body().is(Kind::NZero)) out.push_back({RuleId::Bpred0, Term::nzero()});
        if (t.body().is(Kind::Succ) && is_value(t.body().body())) out.push_back({RuleId::Bpredsucc, t.body().body()});
        break;
    case Kind::IsZero:
        if (is_linear_head(t.body())) lin(RuleId::AIsZero1, t.body(), [](const Term& b) { return Term::iszero(b); });
        if (t.body().is(Kind::NZero)) out.push_back({RuleId::Biszero0, Term::tt()});
        if (t.body().is(Kind::Succ) && is_value(t.body().body())) out.push_back({RuleId::BiszeroS, Term::ff()});
        break;
    case Kind::If:
        if (is_linear_head(t.kid(0)))
            lin(RuleId::AIf1, t.kid(0), [&](const Term& b) { return Term::ifz(b, t.kid(1), t.kid(2)); });
        if (t.kid(0).is(Kind::True)) out.push_back({RuleId::BifTT, t.kid(1)});
        if (t.kid(0).is(Kind::False)) out.push_back({RuleId::BifFF, t.kid(2)});
        break;
    case Kind::Sum:
        if (opts.explicit_f) {
            auto es = t.entries();
            // F: merge every group of like summands, one group per step.
            for (std::size_t i = 0; i < es.size(); ++i) {
                if (i > 0 && alpha_equal(es[i - 1].base, es[i].base)) continue;
                std::size_t j = i + 1;
                while (j < es.size() && alpha_equal(es[i].base, es[j].base)) ++j;
                if (j - i < 2) continue;
                std::vector<Term::Entry> merged(es.begin(), es.begin() + static_cast<long>(i));
                Scalar c = Scalar::zero();
                for (std::size_t k = i; k < j; ++k) c += es[k].coef;
                merged.push_back({c, es[i].base});
                merged.insert(merged.end(), es.begin() + static_cast<long>(j), es.end());
                out.push_back({RuleId::F, from_entries(std::move(merged))});
            }
            if (opts.mode == Mode::Strict) {
                for (std::size_t i = 0; i < es.size(); ++i) {
                    if (!es[i].coef.is_zero()) continue;
                    auto rest = es;
                    rest.erase(rest.begin() + static_cast<long>(i));
                    out.push_back({RuleId::EStar, from_entries(std::move(rest))});
                }
            }
        }
        break;
    case Kind::Scal:
        if (opts.explicit_f && opts.mode == Mode::Strict && t.coef().is_zero())
            out.push_back({RuleId::EStar, Term::zero()});
        break;
    default: break;
    }
    return out;
}

// Children that evaluation contexts reach, in leftmost order.
std::vector<std::size_t> open_children(const Term& t, const RewriteOptions& opts) {
    switch (t.kind()) {
    case Kind::Lam:
    case Kind::Canon:
        if (opts.congruence == Congruence::Full) return {0};
        return {};
    case Kind::If: return {0};
    default: {
        std::vector<std::size_t> idx(t.kids().size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }
    }
}

Term replace_kid(const Term& t, std::size_t i, Term k) {
    auto kids = t.kids();
    kids[i] = std::move(k);
    return t.with_kids(std::move(kids));
}

void collect(const Term& t, const RewriteOptions& opts, std::vector<Reduct>& out) {
    for (std::size_t i : open_children(t, opts)) {
        std::vector<Reduct> sub;
        collect(t.kid(i), opts, sub);
        for (auto& r : sub) {
            r.pos.insert(r.pos.begin(), i);
            r.term = replace_kid(t, i, std::move(r.term));
            out.push_back(std::move(r));
        }
    }
    for (auto& l : root_rules(t, opts)) out.push_back({l.rule, {}, std::move(l.term)});
}

std::optional<Reduct> first_redex(const Term& t, const RewriteOptions& opts) {
    for (std::size_t i : open_children(t, opts)) {
        if (auto r = first_redex(t.kid(i), opts)) {
            r->pos.insert(r->pos.begin(), i);
            r->term = replace_kid(t, i, std::move(r->term));
            return r;
        }
    }
    auto local = root_rules(t, opts);
    if (local.empty()) return std::nullopt;
    return Reduct{local[0].rule, {}, local[0].term};
}

}  // namespace

const char* rule_name(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kRuleNames.size() && kRuleNames[i]; ++i)
        if (name == kRuleNames[i]) return static_cast<RuleId>(i);
    return std::nullopt;
}

bool is_linearity_rule(RuleId r) { return r >= RuleId::EF && r <= RuleId::AIf3; }
bool is_beta_rule(RuleId r) { return r >= RuleId::B1; }

std::string position_str(const Position& p) {
    if (p.empty()) return "root";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

Term prepare(const Term& t, const RewriteOptions& opts) {
    return canonicalize(t, opts.mode, !opts.explicit_f).term;
}

std::vector<Reduct> reducts(const Term& t, const RewriteOptions& opts) {
    std::vector<Reduct> out;
    collect(t, opts, out);
    for (auto& r : out) r.term = prepare(r.term, opts);
    return out;
}

std::optional<Reduct> step(const Term& t, const RewriteOptions& opts) {
    auto r = first_redex(t, opts);
    if (r) r->term = canonicalize(r->term, Mode::Weak, !opts.explicit_f).term;
    return r;
}

std::string Trace::str() const {
    std::ostringstream os;
    os << "0. " << initial.str() << '\n';
    for (std::size_t k = 0; k < steps.size(); ++k)
        os << (k + 1) << ". [" << rule_name(steps[k].rule) << " @ " << position_str(steps[k].pos) << "] "
           << steps[k].term.str() << '\n';
    if (status == TraceStatus::FuelExhausted) os << "fuel exhausted after " << steps.size() << " steps\n";
    return os.str();
}

Trace normalize(const Term& t, const RewriteOptions& opts, std::size_t fuel) {
    Trace tr{t, {}, TraceStatus::Normal};
    Term cur = t;
    while (true) {
        Canonical c = canonicalize(cur, opts.mode, !opts.explicit_f);
        if (!ac_equal(c.term, cur)) {
            if (tr.steps.size() >= fuel) {
                tr.status = TraceStatus::FuelExhausted;
                return tr;
            }
            tr.steps.push_back({c.used_zero_rule ? RuleId::EFStar : RuleId::EF, {}, c.term});
        } else if (!tr.steps.empty()) {
            // a pure reordering is not a step
            tr.steps.back().term = c.term;
        }
        cur = c.term;
        auto s = step(cur, opts);
        if (!s) return tr;
        if (tr.steps.size() >= fuel) {
            tr.status = TraceStatus::FuelExhausted;
            return tr;
        }
        tr.steps.push_back(*s);
        cur = s->term;
    }
}

namespace {

struct Visit {
    std::optional<Term> parent;
    std::optional<Reduct> via;
};

using VisitMap = std::map<Term, Visit, TermLess>;

std::vector<Reduct> path_to(const VisitMap& seen, Term t) {
    std::vector<Reduct> path;
    while (true) {
        const Visit& v = seen.at(t);
        if (!v.parent) break;
        path.push_back(*v.via);
        t = *v.parent;
    }
    return {path.rbegin(), path.rend()};
}

}  // namespace

std::optional<std::vector<Reduct>> find_path(const Term& t, const Term& target, const RewriteOptions& opts,
                                             std::size_t fuel) {
    Term start = prepare(t, opts);
    Term goal = prepare(target, opts);
    VisitMap seen{{start, {}}};
    std::deque<Term> queue{start};
    std::size_t expanded = 0;
    while (!queue.empty()) {
        Term cur = queue.front();
        queue.pop_front();
        if (alpha_equal(cur, goal)) return path_to(seen, cur);
        if (expanded++ >= fuel) break;
        for (auto& r : reducts(cur, opts)) {
            if (seen.count(r.term)) continue;
            seen.emplace(r.term, Visit{cur, r});
            queue.push_back(r.term);
        }
    }
    return std::nullopt;
}

TermSet explore(const Term& t, const RewriteOptions& opts, std::size_t fuel) {
    TermSet seen{prepare(t, opts)};
    std::deque<Term> queue{*seen.begin()};
    std::size_t expanded = 0;
    while (!queue.empty() && expanded++ < fuel) {
        Term cur = queue.front();
        queue.pop_front();
        for (auto& r : reducts(cur, opts))
            if (seen.insert(r.term).second) queue.push_back(r.term);
    }
    return seen;
}

JoinResult join(const Term& a, const Term& b, const RewriteOptions& opts, std::size_t fuel) {
    RewriteOptions det = opts;
    det.explicit_f = false;
    Trace ta = normalize(a, det, fuel);
    Trace tb = normalize(b, det, fuel);
    if (ta.normal() && tb.normal() && alpha_equal(ta.result(), tb.result()))
        return {true, ta.result(), 0};

    std::array<TermSet, 2> seen{TermSet{prepare(a, opts)}, TermSet{prepare(b, opts)}};
    std::array<std::deque<Term>, 2> queue{std::deque<Term>{*seen[0].begin()}, std::deque<Term>{*seen[1].begin()}};
    if (seen[1].count(*seen[0].begin())) return {true, *seen[0].begin(), 0};
    JoinResult res;
    while ((!queue[0].empty() || !queue[1].empty()) && res.expanded < fuel) {
        for (int side = 0; side < 2; ++side) {
            if (queue[side].empty()) continue;
            Term cur = queue[side].front();
            queue[side].pop_front();
            ++res.expanded;
            for (auto& r : reducts(cur, opts)) {
                if (!seen[side].insert(r.term).second) continue;
                if (seen[1 - side].count(r.term)) {
                    res.joined = true;
                    res.common = r.term;
                    return res;
                }
                queue[side].push_back(r.term);
            }
        }
    }
    return res;
}

}  // namespace alc
