#include "alc/alc.h"

#include "alc/document.hpp"
#include "alc/equational.hpp"
#include "alc/prelude.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct alc_session {
    alc::Settings settings;
    alc_ring ring = ALC_RING_AUTO;
    std::string error, hint;
    std::size_t line = 0, column = 0;
};

struct alc_term {
    alc::Term term;
    alc::Settings settings;
    std::size_t line = 0;
};

struct alc_document {
    alc::Document doc;
};

namespace {

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

bool rational_only(const alc::Term& t) {
    if (t.is(alc::Kind::Scal) && !t.coef().is_rational()) return false;
    for (const auto& c : t.coefs())
        if (!c.is_rational()) return false;
    for (const auto& k : t.kids())
        if (!rational_only(k)) return false;
    return true;
}

// Runs f, translating exceptions into status codes and session errors.
template <class F>
alc_status guard(alc_session* s, F&& f) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->error.clear();
    s->hint.clear();
    s->line = s->column = 0;
    try {
        return f();
    } catch (const alc::ParseError& e) {
        s->error = e.what();
        s->line = e.line();
        s->column = e.col();
        std::string want;
        for (const auto& x : e.expected()) want += (want.empty() ? "" : ", ") + x;
        s->hint = want.empty() ? "check the term syntax" : "expected one of: " + want;
        return ALC_ERR_PARSE;
    } catch (const alc::DocumentError& e) {
        s->error = e.what();
        s->line = e.line();
        s->hint = "see the directive list in the README";
        return ALC_ERR_PARSE;
    } catch (const alc::TypeError& e) {
        s->error = e.what();
        s->hint = "rule " + e.rule() + " failed on " + e.subterm().str();
        return ALC_ERR_TYPE;
    } catch (const alc::UnsupportedConstruct& e) {
        s->error = e.what();
        s->hint = "only the shared source grammar can be embedded";
        return ALC_ERR_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        s->error = e.what();
        s->hint = "check the argument format";
        return ALC_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        s->error = e.what();
        s->hint = "internal error";
        return ALC_ERR_INTERNAL;
    }
}

void check_ring(const alc_session* s, const alc::Term& t) {
    if (s->ring == ALC_RING_RAT && !rational_only(t))
        throw std::invalid_argument("irrational scalar in a rational-ring session: " + t.str());
}

alc::Term resolve(alc_session* s, const char* src) {
    if (!src) throw std::invalid_argument("null term source");
    alc::Term t = alc::read_term(src, s->settings);
    check_ring(s, t);
    return t;
}

}  // namespace

extern "C" {

const char* alc_version(void) { return "0.1.0"; }

const char* alc_status_name(alc_status s) {
    switch (s) {
    case ALC_OK: return "ok";
    case ALC_ERR_PARSE: return "parse-error";
    case ALC_ERR_TYPE: return "type-error";
    case ALC_ERR_FUEL: return "fuel-exhausted";
    case ALC_NOT_EQUAL: return "not-equal";
    case ALC_UNKNOWN: return "unknown";
    case ALC_NOT_JOINED: return "not-joined";
    case ALC_CHECK_FAILED: return "check-failed";
    case ALC_ERR_ARGUMENT: return "bad-argument";
    case ALC_ERR_IO: return "io-error";
    case ALC_ERR_INTERNAL: return "internal-error";
    }
    return "?";
}

void alc_string_free(char* s) { std::free(s); }

alc_status alc_session_new(alc_session** out) {
    if (!out) return ALC_ERR_ARGUMENT;
    *out = new (std::nothrow) alc_session;
    return *out ? ALC_OK : ALC_ERR_INTERNAL;
}

void alc_session_free(alc_session* s) { delete s; }

alc_status alc_session_set_mode(alc_session* s, alc_mode m) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->settings.mode = m == ALC_MODE_STRICT ? alc::Mode::Strict : alc::Mode::Weak;
    return ALC_OK;
}

alc_status alc_session_set_model(alc_session* s, alc_model m) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->settings.model = m == ALC_MODEL_WEAK ? alc::Model::Weak : alc::Model::Strong;
    return ALC_OK;
}

alc_status alc_session_set_congruence(alc_session* s, alc_congruence c) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->settings.congruence = c == ALC_FULL ? alc::Congruence::Full : alc::Congruence::CallByValue;
    return ALC_OK;
}

alc_status alc_session_set_fuel(alc_session* s, size_t fuel) {
    if (!s || fuel == 0) return ALC_ERR_ARGUMENT;
    s->settings.fuel = fuel;
    return ALC_OK;
}

alc_status alc_session_set_ring(alc_session* s, alc_ring r) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->ring = r;
    return ALC_OK;
}

alc_status alc_session_use_prelude(alc_session* s, int on) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->settings.prelude = on != 0;
    return ALC_OK;
}

alc_status alc_session_set_points(alc_session* s, const char* points) {
    return guard(s, [&] {
        s->settings.at = alc::parse_points(points ? points : "");
        return ALC_OK;
    });
}

alc_status alc_session_declare(alc_session* s, const char* name, const char* type_src) {
    return guard(s, [&] {
        if (!name || !type_src) throw std::invalid_argument("null argument");
        s->settings.ctx.push(name, alc::parse_type(type_src, alc::parse_options(s->settings)));
        return ALC_OK;
    });
}

alc_status alc_session_let(alc_session* s, const char* name, const char* term_src) {
    return guard(s, [&] {
        if (!name) throw std::invalid_argument("null name");
        alc::Term t = resolve(s, term_src);
        s->settings.lets.emplace_back(name, t);
        return ALC_OK;
    });
}

alc_status alc_session_clear(alc_session* s) {
    if (!s) return ALC_ERR_ARGUMENT;
    s->settings.ctx = alc::Context{};
    s->settings.lets.clear();
    return ALC_OK;
}

alc_status alc_session_describe(alc_session* s, char** out) {
    return guard(s, [&] {
        const auto& st = s->settings;
        std::ostringstream os;
        os << "mode " << alc::mode_name(st.mode) << "\nmodel " << alc::model_name(st.model) << "\ncongruence "
           << (st.congruence == alc::Congruence::Full ? "full" : "cbv") << "\nfuel " << st.fuel << "\nprelude "
           << (st.prelude ? "on" : "off") << '\n';
        for (const auto& [x, ty] : st.ctx.bindings()) os << x << " : " << ty.str() << '\n';
        for (const auto& [x, t] : st.lets) os << x << " = " << t.str() << '\n';
        put(out, os.str());
        return ALC_OK;
    });
}

const char* alc_last_error(const alc_session* s) { return s ? s->error.c_str() : "no session"; }
const char* alc_last_hint(const alc_session* s) { return s ? s->hint.c_str() : ""; }
size_t alc_last_line(const alc_session* s) { return s ? s->line : 0; }
size_t alc_last_column(const alc_session* s) { return s ? s->column : 0; }

alc_status alc_parse(alc_session* s, const char* src, alc_term** out) {
    return guard(s, [&] {
        if (!out) throw std::invalid_argument("null output");
        *out = new alc_term{resolve(s, src), s->settings, 0};
        return ALC_OK;
    });
}

void alc_term_free(alc_term* t) { delete t; }

alc_status alc_term_str(alc_session* s, const alc_term* t, char** out) {
    return guard(s, [&] {
        if (!t) throw std::invalid_argument("null term");
        put(out, t->term.str());
        return ALC_OK;
    });
}

int alc_term_has_fix(const alc_term* t) { return t && alc::contains_fix(t->term) ? 1 : 0; }
int alc_term_is_strict(const alc_term* t) { return t && t->settings.mode == alc::Mode::Strict ? 1 : 0; }
size_t alc_term_line(const alc_term* t) { return t ? t->line : 0; }

alc_status alc_typecheck(alc_session* s, const alc_term* t, char** type_out) {
    return guard(s, [&] {
        if (!t) throw std::invalid_argument("null term");
        put(type_out, alc::infer(t->settings.ctx, t->term).str());
        return ALC_OK;
    });
}

alc_status alc_normalize(alc_session* s, const alc_term* t, char** result, char** trace, size_t* steps) {
    return guard(s, [&] {
        if (!t) throw std::invalid_argument("null term");
        alc::Trace tr = alc::normalize(t->term, alc::rewrite_options(t->settings), t->settings.fuel);
        put(result, tr.result().str());
        put(trace, tr.str());
        if (steps) *steps = tr.steps.size();
        return tr.normal() ? ALC_OK : ALC_ERR_FUEL;
    });
}

alc_status alc_equiv(alc_session* s, const alc_term* a, const alc_term* b, char** detail) {
    return guard(s, [&] {
        if (!a || !b) throw std::invalid_argument("null term");
        const auto& st = a->settings;
        alc::Type ty = alc::infer(st.ctx, a->term);
        alc::EqVerdict v = alc::ax_equiv(st.ctx, a->term, b->term, ty, st.mode, st.fuel);
        put(detail, std::string(alc::verdict_name(v.verdict)) + ": " + v.reason);
        switch (v.verdict) {
        case alc::Verdict::Equal: return ALC_OK;
        case alc::Verdict::NotEqual: return ALC_NOT_EQUAL;
        default: return ALC_UNKNOWN;
        }
    });
}

alc_status alc_join(alc_session* s, const alc_term* a, const alc_term* b, char** detail) {
    return guard(s, [&] {
        if (!a || !b) throw std::invalid_argument("null term");
        alc::JoinResult j = alc::join(a->term, b->term, alc::rewrite_options(a->settings), a->settings.fuel);
        if (j.joined) {
            put(detail, "joined at " + j.common->str());
            return ALC_OK;
        }
        put(detail, "no common reduct after " + std::to_string(j.expanded) + " terms");
        return ALC_NOT_JOINED;
    });
}

alc_status alc_denote(alc_session* s, const alc_term* t, char** out, int* approximate) {
    return guard(s, [&] {
        if (!t) throw std::invalid_argument("null term");
        alc::Denotation d = alc::denote_computation({}, t->term, alc::sem_options(t->settings));
        put(out, alc::denotation_text(d, t->settings.at));
        if (approximate) *approximate = d.approximate ? 1 : 0;
        return ALC_OK;
    });
}

alc_status alc_demo(alc_session* s, const char* name, char** out) {
    return guard(s, [&] {
        std::string n = name ? name : "";
        const auto& st = s->settings;
        std::ostringstream os;
        if (n == "broken") {
            alc::BrokenDemo d = alc::broken_demo(alc::Term::var("b"), alc::Type::base("iota"), st.mode,
                                                 st.mode == alc::Mode::Strict ? 200 : 500);
            os << d.str();
            put(out, os.str());
            return d.join.joined ? ALC_OK : ALC_NOT_JOINED;
        }
        if (n == "quantum") {
            using namespace alc;
            Term h = hadamard();
            for (const auto& [label, q] : {std::pair<const char*, Term>{"ttq", ttq()}, {"ffq", ffq()}}) {
                EqVerdict v = ax_equiv({}, Term::app(h, Term::app(h, q)), q, qbool_type(), Mode::Strict);
                os << "H (H " << label << ") ~ " << label << ": " << verdict_name(v.verdict) << '\n';
            }
            Scalar a(Rat(3, 5)), b(Rat(4, 5));
            Trace tr = normalize(Term::app(measure_p(), dens(a, b)), {Mode::Strict, Congruence::Full}, st.fuel);
            os << "P dens(3/5, 4/5) -> " << tr.result().str() << '\n';
            bool diag = alpha_equal(tr.result(), canonical(diagonal(a, b), Mode::Strict));
            os << "diagonal: " << (diag ? "yes" : "no") << '\n';
            put(out, os.str());
            return diag ? ALC_OK : ALC_CHECK_FAILED;
        }
        if (n == "pow") {
            using namespace alc;
            Term poly = polynomial({{Scalar(1), 2}, {Scalar(2), 3}});
            Term arg = Term::canon(Term::scal(Scalar(2), Term::star()));
            Term t = Term::cocanon(Term::app(Term::app(pow_term(), poly), arg));
            SemOptions o = sem_options(st);
            o.model = Model::Strong;
            Denotation d = denote_computation({}, t, o);
            os << "Pow " << poly.str() << " " << arg.str() << " denotes " << d.str() << '\n';
            os << "expected 1*2^2 + 2*2^3 = 20\n";
            put(out, os.str());
            return d.element.at(SemValue::unit()) == Coef(Scalar(20)) ? ALC_OK : ALC_CHECK_FAILED;
        }
        throw std::invalid_argument("unknown demo '" + n + "' (broken, quantum, pow)");
    });
}

alc_status alc_document_load(alc_session* s, const char* path, alc_document** out) {
    return guard(s, [&] {
        if (!path || !out) throw std::invalid_argument("null argument");
        alc::Document d;
        try {
            d = alc::load_document(path, s->settings);
        } catch (const alc::DocumentError& e) {
            if (e.line() == 0) {
                s->error = e.what();
                s->hint = "check the path";
                return ALC_ERR_IO;
            }
            throw;
        }
        for (const auto& it : d.items) check_ring(s, it.term);
        *out = new alc_document{std::move(d)};
        return ALC_OK;
    });
}

alc_status alc_document_parse(alc_session* s, const char* text, const char* name, alc_document** out) {
    return guard(s, [&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        alc::Document d = alc::parse_document(text, name ? name : "<input>", s->settings);
        for (const auto& it : d.items) check_ring(s, it.term);
        *out = new alc_document{std::move(d)};
        return ALC_OK;
    });
}

void alc_document_free(alc_document* d) { delete d; }

size_t alc_document_size(const alc_document* d) { return d ? d->doc.items.size() : 0; }

alc_status alc_document_item(alc_session* s, const alc_document* d, size_t i, alc_term** out) {
    return guard(s, [&] {
        if (!d || !out || i >= d->doc.items.size()) throw std::invalid_argument("no such item");
        const auto& it = d->doc.items[i];
        *out = new alc_term{it.term, it.settings, it.line};
        return ALC_OK;
    });
}

alc_status alc_document_check(alc_session* s, const alc_document* d, char** report, size_t* failures) {
    return guard(s, [&] {
        if (!d) throw std::invalid_argument("null document");
        std::ostringstream os;
        std::size_t bad = 0;
        for (const auto& o : alc::check_document(d->doc)) {
            bad += !o.ok;
            os << (o.ok ? "PASS" : "FAIL") << '\t' << d->doc.path << ':' << o.line << '\t' << o.what << '\t'
               << o.detail << '\n';
        }
        put(report, os.str());
        if (failures) *failures = bad;
        return bad ? ALC_CHECK_FAILED : ALC_OK;
    });
}

}  // extern "C"
