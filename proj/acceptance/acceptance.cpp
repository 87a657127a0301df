// One line per acceptance criterion. Exit status is nonzero if a criterion
// fails, unless it is listed with --known-red.
#include "alc/equational.hpp"
#include "alc/parser.hpp"
#include "alc/prelude.hpp"
#include "alc/rewrite.hpp"
#include "alc/semantics.hpp"
#include "alc/typing.hpp"

#include "../tests/support/gen.hpp"
#include "../tests/support/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace alc;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

Term T(const char* s) { return parse_term(s); }

std::string ms_since(std::chrono::steady_clock::time_point t0) {
    auto d = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return std::to_string(d.count()) + " ms";
}

std::vector<std::pair<Term, Type>> corpus(std::size_t n, std::uint64_t seed, bool observable = false) {
    testgen::GenOptions o;
    o.observable = observable;
    testgen::TermGen g(seed, o);
    std::vector<std::pair<Term, Type>> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(g.closed());
    return out;
}

Outcome golden_reductions() {
    struct Case {
        const char* src;
        const char* want;
        Congruence c;
    };
    const Case cases[] = {
        {"(\\x. \\f. f x x) (y + z)", "(\\f. f y y) + (\\f. f z z)", Congruence::CallByValue},
        {"(\\x. \\f. f !x !x) [y + z]", "(\\f. f y y) + (\\f. f z y) + (\\f. f y z) + (\\f. f z z)", Congruence::Full},
    };
    std::ostringstream note;
    bool ok = true;
    for (const auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        Trace tr = normalize(T(c.src), {Mode::Strict, c.c}, 1000);
        auto elapsed = std::chrono::steady_clock::now() - t0;
        bool good = tr.normal() && alpha_equal(tr.result(), canonical(T(c.want), Mode::Strict)) &&
                    elapsed < std::chrono::seconds(1);
        ok = ok && good;
        note << tr.steps.size() << " steps in " << ms_since(t0) << "; ";
    }
    return {ok, note.str()};
}

Outcome yb_unfolding() {
    Term y = yb(Term::var("b"), Type::base("iota"));
    Trace tr = normalize(y, {Mode::Weak}, 4);
    Term want = canonical(Term::plus(Term::var("b"), y), Mode::Weak);
    std::size_t hit = 0;
    for (std::size_t k = 0; k < tr.steps.size(); ++k)
        if (alpha_equal(tr.steps[k].term, want)) hit = k + 1;
    bool rules_ok = hit > 0;
    std::string seq;
    for (std::size_t k = 0; k < hit; ++k) {
        RuleId r = tr.steps[k].rule;
        seq += std::string(k ? "," : "") + rule_name(r);
        bool allowed = k == 0 ? r == RuleId::BY : k == 1 ? r == RuleId::B1 : r == RuleId::B2;
        rules_ok = rules_ok && allowed;
    }
    return {rules_ok && hit <= 4, "b + Y_b after " + std::to_string(hit) + " steps: " + seq};
}

Outcome broken_consistency() {
    BrokenDemo s = broken_demo(Term::var("b"), Type::base("iota"), Mode::Strict, 200);
    BrokenDemo w = broken_demo(Term::var("b"), Type::base("iota"), Mode::Weak, 500);
    bool strict_ok = s.branch_a && s.branch_b;
    std::ostringstream note;
    note << "strict: zero in " << (s.branch_a ? std::to_string(s.branch_a->size()) : "-") << " steps, b in "
         << (s.branch_b ? std::to_string(s.branch_b->size()) : "-") << " steps; weak: endpoints "
         << (w.branch_a && w.branch_b ? "reached" : "missing") << ", "
         << (w.join.joined ? "joined" : "not joined after " + std::to_string(w.join.expanded) + " terms");
    return {strict_ok && w.join.joined, note.str()};
}

Outcome safety(const std::vector<std::pair<Term, Type>>& ts) {
    std::size_t stuck = 0, drift = 0, steps = 0;
    std::string first;
    for (const auto& [t, a] : ts) {
        if (!is_value_combination(canonical(t, Mode::Strict)) && reducts(t, {Mode::Strict}).empty()) ++stuck;
        Trace tr = normalize(t, {Mode::Strict}, 2000);
        for (const auto& st : tr.steps) {
            ++steps;
            if (!has_type({}, st.term, a)) ++drift;
        }
        if (!is_value_combination(canonical(tr.result(), Mode::Strict)) && tr.normal()) {
            ++stuck;
            if (first.empty()) first = tr.result().str();
        }
    }
    std::ostringstream note;
    note << ts.size() << " terms, " << steps << " steps, " << stuck << " stuck, " << drift << " type changes"
         << (first.empty() ? "" : "; first stuck: " + first);
    return {stuck == 0 && drift == 0 && ts.size() >= 1000, note.str()};
}

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::size_t i : p) cur = &cur->kid(i);
    return *cur;
}

// Termination measures: a linearity step must shrink (np, cx) at its redex, and
// can never grow np of the whole term; a canonicalization step shrinks np.
Outcome normalization(const std::vector<std::pair<Term, Type>>& ts) {
    std::size_t exhausted = 0, checked = 0, violations = 0;
    std::string first;
    RewriteOptions o{Mode::Strict};
    for (const auto& [t, a] : ts) {
        Trace tr = normalize(t, o, 10000);
        if (!tr.normal()) ++exhausted;
        Term prev = tr.initial;
        for (const auto& st : tr.steps) {
            if (is_linearity_rule(st.rule)) {
                ++checked;
                bool ok = !(measure(prev).np < measure(st.term).np);
                if (st.rule == RuleId::EF || st.rule == RuleId::EFStar) {
                    ok = ok && measure(st.term).np < measure(prev).np;
                } else {
                    Term start = prepare(prev, o);
                    const Term& redex = subterm_at(start, st.pos);
                    bool found = false;
                    for (const auto& r : reducts(redex, o)) {
                        if (!r.pos.empty() || r.rule != st.rule) continue;
                        found = true;
                        ok = ok && measure(r.term) < measure(redex);
                    }
                    ok = ok && found;
                }
                if (!ok) {
                    ++violations;
                    if (first.empty()) first = std::string(rule_name(st.rule)) + " on " + prev.str();
                }
            }
            prev = st.term;
        }
    }
    std::ostringstream note;
    note << exhausted << " out of fuel, " << checked << " E/F/A steps, " << violations << " without decrease"
         << (first.empty() ? "" : "; first: " + first);
    return {exhausted == 0 && violations == 0, note.str()};
}

Outcome confluence(const std::vector<std::pair<Term, Type>>& ts) {
    std::size_t pairs = 0, failures = 0;
    RewriteOptions o{Mode::Strict};
    for (const auto& [t, a] : ts) {
        auto rs = reducts(t, o);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                ++pairs;
                if (!join(rs[i].term, rs[j].term, o, 2000).joined) ++failures;
            }
    }
    return {failures == 0, std::to_string(pairs) + " reduct pairs, " + std::to_string(failures) + " unjoined"};
}

Outcome weak_zero() {
    Term discard = T("(\\y:M T. star) ((\\x:M T. x + {-1}*x) [Y(\\x:M T. [star + !x])])");
    Term forced = T("(\\y:M T. !y) ((\\x:M T. x + {-1}*x) [Y(\\x:M T. [star + !x])])");
    Trace r_discard = normalize(discard, {Mode::Weak}, 1000);
    Trace r_forced = normalize(forced, {Mode::Weak}, 1000);
    bool ok_discard = r_discard.normal() && alpha_equal(r_discard.result(), T("0*star"));
    bool forced_zero = false;
    for (const auto& st : r_forced.steps) forced_zero = forced_zero || st.term.is(Kind::Zero);
    bool ok_forced = !r_forced.normal() && !forced_zero;

    bool eq_ok = true;
    const std::pair<Context, Type> cases[] = {
        {Context{{"u", Type::integer()}}, Type::integer()},
        {Context{{"u", Type::monad(Type::top())}}, Type::monad(Type::top())},
        {Context{{"u", Type::bit()}}, Type::bit()},
    };
    for (const auto& [ctx, ty] : cases) {
        Term lhs = Term::scal(Scalar::zero(), Term::var("u"));
        Term rhs = Term::zero(ty);
        eq_ok = eq_ok && ax_equiv(ctx, lhs, rhs, ty, Mode::Strict).verdict == Verdict::Equal;
        eq_ok = eq_ok && ax_equiv(ctx, lhs, rhs, ty, Mode::Weak).verdict == Verdict::NotEqual;
    }
    std::ostringstream note;
    note << "discarded -> " << r_discard.result().str() << "; forced " << (r_forced.normal() ? "normal" : "out of fuel")
         << (forced_zero ? ", hit zero" : ", never zero") << "; 0*u vs zero " << (eq_ok ? "as expected" : "WRONG");
    return {ok_discard && ok_forced && eq_ok, note.str()};
}

Outcome quantum() {
    Term h = hadamard();
    bool ok = true;
    for (const Term& q : {ttq(), ffq()})
        ok = ok && ax_equiv({}, Term::app(h, Term::app(h, q)), q, qbool_type(), Mode::Strict).verdict == Verdict::Equal;
    Scalar a(Rat(3, 5)), b(Rat(4, 5));
    Trace tr = normalize(Term::app(measure_p(), dens(a, b)), {Mode::Strict, Congruence::Full}, 10000);
    Term want = canonical(T("\\x:M T -> M T -> M T. \\a:M T. \\b:M T. [!(x [{9/25}*!a] [{16/25}*!b])]"), Mode::Strict);
    bool diag = tr.normal() && alpha_equal(tr.result(), want);
    return {ok && diag, std::string("H H = id: ") + (ok ? "yes" : "no") + "; P dens(3/5,4/5) diagonal: " +
                            (diag ? "yes" : "no")};
}

Outcome soundness(const std::vector<std::pair<Term, Type>>& ts) {
    std::size_t checked = 0, mismatches = 0, terms = 0;
    std::string first;
    struct Pair {
        Mode mode;
        Model model;
    };
    const Pair pairs[] = {{Mode::Strict, Model::Strong}, {Mode::Weak, Model::Strong}, {Mode::Weak, Model::Weak}};
    auto run = [&](const Term& t, const Pair& p, std::size_t steps) {
        SemOptions o;
        o.mode = p.mode;
        o.model = p.model;
        SoundnessReport r = soundness_check(t, {}, o, steps);
        checked += r.checked;
        mismatches += r.mismatches;
        if (!r.ok() && first.empty() && !r.details.empty()) first = r.details.front();
    };
    const char* golden[] = {
        "(\\x:M int. \\f:int -> int -> int. f !x !x) [n1 + n2]",
        "(\\y:M T. star) ((\\x:M T. x + {-1}*x) [Y(\\x:M T. [star + !x])])",
        "Y(\\x:M int. [n0 + !x])",
        "(\\x:int. succ x) (n1 + {2}*n2)",
        "fst <star + star, tt>",
        "if iszero (pred n1) then {1/2}*n3 else n2",
    };
    for (const char* g : golden) {
        Term t = T(g);
        for (const auto& p : pairs) {
            if (p.mode == Mode::Strict && contains_fix(t)) continue;
            run(t, p, 40);
        }
    }
    for (const auto& [t, a] : ts) {
        ++terms;
        for (const auto& p : pairs) run(t, p, 200);
    }
    std::ostringstream note;
    note << terms << " generated terms + " << std::size(golden) << " golden, " << checked << " steps compared, "
         << mismatches << " mismatches" << (first.empty() ? "" : "; first: " + first);
    return {mismatches == 0 && terms >= 500, note.str()};
}

Outcome model_behaviours() {
    SemOptions strong;
    SemOptions weak;
    weak.model = Model::Weak;
    Term idfix = T("Y(\\x:M T. [!x])");
    Term ones = T("Y(\\x:M int. [n0 + succ !x])");
    Denotation a = denote_computation({}, idfix, strong);
    Denotation b = denote_computation({}, idfix, weak);
    Denotation c = denote_computation({}, ones, weak);
    bool ok_a = a.element.is_bottom();
    bool ok_b = !b.element.is_bottom() && b.element == ModuleElement::zero(Model::Weak);
    bool ok_c = !c.element.is_bottom();
    for (unsigned n = 0; n <= 10; ++n) ok_c = ok_c && c.element.at(SemValue::integer(n)) == Coef(Scalar(1));
    return {ok_a && ok_b && ok_c, "strong " + a.str() + "; weak " + b.str() + "; ones at 0..10: " +
                                      (ok_c ? "yes" : "no")};
}

Outcome pow_example() {
    using oracle::Q;
    std::mt19937_64 rng(11);
    struct Triple {
        std::vector<std::pair<Q, unsigned>> poly;
        Q alpha;
    };
    std::vector<Triple> triples = {{{{1, 2}, {2, 3}}, 2}};
    for (int k = 0; k < 3; ++k) {
        Triple t;
        int terms = 1 + int(rng() % 3);
        std::set<unsigned> used;
        for (int i = 0; i < terms; ++i) {
            unsigned n = unsigned(rng() % 5);
            if (!used.insert(n).second) continue;
            t.poly.push_back({Q(long(rng() % 7) - 3, 1 + long(rng() % 3)), n});
        }
        t.alpha = Q(1 + long(rng() % 5), 1 + long(rng() % 2));
        triples.push_back(t);
    }
    auto to_rat = [](const Q& q) {
        return Rat(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
    };
    bool ok = true;
    std::ostringstream note;
    for (const auto& tr : triples) {
        std::vector<std::pair<Scalar, unsigned>> poly;
        for (const auto& [beta, n] : tr.poly) poly.push_back({Scalar(to_rat(beta)), n});
        Term t = Term::cocanon(Term::app(Term::app(pow_term(), polynomial(poly)),
                                         Term::canon(Term::scal(Scalar(to_rat(tr.alpha)), Term::star()))));
        Denotation d = denote_computation({}, t, SemOptions{});
        Q want = oracle::poly_eval(tr.poly, tr.alpha);
        Coef got = d.element.at(SemValue::unit());
        bool good = !d.element.is_bottom() && got == Coef(Scalar(to_rat(want)));
        ok = ok && good;
        note << got.str() << (good ? "=" : "!=") << want.str() << "; ";
    }
    return {ok, note.str()};
}

Outcome embeddings() {
    std::mt19937_64 rng(5);
    std::size_t n = 0, failures = 0;
    std::string first;
    for (; n < 600; ++n) {
        testgen::SourceTerm s = testgen::source_term(rng, 20);
        Context alg, lin;
        for (const auto& [x, a] : s.ctx.bindings()) {
            alg.push(x, Type::monad(enc_alg_type(a)));
            lin.push(x, enc_lin_type(a));
        }
        bool ok_alg = has_type(alg, enc_alg(s.term), enc_alg_type(s.type));
        bool ok_lin = has_type(lin, enc_lin(s.term), enc_lin_type(s.type));
        if (!ok_alg || !ok_lin) {
            ++failures;
            if (first.empty()) first = s.term.str();
        }
    }
    return {failures == 0, std::to_string(n) + " source terms, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : "; first: " + first)};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known_red;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--known-red" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) known_red.insert(std::stoi(tok));
        }
    }

    auto gen = corpus(1000, 2024);
    auto obs = corpus(500, 77, true);

    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"golden reductions", golden_reductions},
        {"Y_b unfolding", yb_unfolding},
        {"inconsistency witness and weak join", broken_consistency},
        {"safety and subject reduction", [&] { return safety(gen); }},
        {"normalization and measure decrease", [&] { return normalization(gen); }},
        {"local confluence", [&] { return confluence(gen); }},
        {"weak zero separation", weak_zero},
        {"quantum toolkit", quantum},
        {"denotational soundness", [&] { return soundness(obs); }},
        {"convergence models", model_behaviours},
        {"Pow against polynomial oracle", pow_example},
        {"embeddings preserve typing", embeddings},
    };
    int bad = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int k = int(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << " (" << criteria[i].first << "): " << o.note
                  << " [" << ms_since(t0) << "]" << (o.pass || !known_red.count(k) ? "" : " (known red)") << std::endl;
        if (!o.pass && !known_red.count(k)) ++bad;
    }
    return bad == 0 ? 0 : 1;
}
