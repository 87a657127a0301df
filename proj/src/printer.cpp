#include "alc/term.hpp"

namespace alc {

namespace {

// Precedence levels: 0 sum / lambda / if, 1 scalar multiple, 2 application,
// 3 prefix operators, 4 atoms.
int prec(const Term& t) {
    switch (t.kind()) {
    case Kind::Lam:
    case Kind::If:
    case Kind::Sum: return 0;
    case Kind::Scal: return 1;
    case Kind::App: return 2;
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Cocanon:
    case Kind::Fix:
    case Kind::Pred:
    case Kind::IsZero: return 3;
    case Kind::Succ: return 3;
    default: return 4;
    }
}

std::string scalar_literal(const Scalar& s) {
    if (s.is_rational() && s.re().den() == 1 && s.re().sign() >= 0) return s.re().str();
    return "{" + s.str() + "}";
}

// succ^k(n0) as k, otherwise -1.
long numeral_value(const Term& t) {
    long k = 0;
    const Term* cur = &t;
    while (cur->is(Kind::Succ)) {
        ++k;
        cur = &cur->kid(0);
    }
    return cur->is(Kind::NZero) ? k : -1;
}

void show(const Term& t, int ctx, std::string& out);

void show_at(const Term& t, int ctx, std::string& out) {
    bool paren = prec(t) < ctx;
    if (paren) out += '(';
    show(t, paren ? 0 : ctx, out);
    if (paren) out += ')';
}

void show(const Term& t, int ctx, std::string& out) {
    switch (t.kind()) {
    case Kind::Var: out += t.name(); return;
    case Kind::Star: out += "star"; return;
    case Kind::True: out += "tt"; return;
    case Kind::False: out += "ff"; return;
    case Kind::NZero: out += "n0"; return;
    case Kind::Zero:
        if (t.annot()) out += "(zero : " + t.annot()->str() + ")";
        else out += "zero";
        return;
    case Kind::Lam:
        out += '\\';
        out += t.name();
        if (t.annot()) out += ":" + t.annot()->str();
        out += ". ";
        show_at(t.body(), 0, out);
        return;
    case Kind::App:
        show_at(t.kid(0), 2, out);
        out += ' ';
        show_at(t.kid(1), 3, out);
        return;
    case Kind::Pair:
        out += '<';
        show_at(t.kid(0), 0, out);
        out += ", ";
        show_at(t.kid(1), 0, out);
        out += '>';
        return;
    case Kind::Fst: out += "fst "; show_at(t.kid(0), 3, out); return;
    case Kind::Snd: out += "snd "; show_at(t.kid(0), 3, out); return;
    case Kind::Cocanon: out += '!'; show_at(t.kid(0), 3, out); return;
    case Kind::Fix: out += "Y("; show_at(t.kid(0), 0, out); out += ')'; return;
    case Kind::Pred: out += "pred "; show_at(t.kid(0), 3, out); return;
    case Kind::IsZero: out += "iszero "; show_at(t.kid(0), 3, out); return;
    case Kind::Succ: {
        long k = numeral_value(t);
        if (k >= 0) {
            out += "n" + std::to_string(k);
        } else {
            out += "succ ";
            show_at(t.kid(0), 3, out);
        }
        return;
    }
    case Kind::Canon: out += '['; show_at(t.kid(0), 0, out); out += ']'; return;
    case Kind::Scal:
        out += scalar_literal(t.coef());
        out += '*';
        show_at(t.body(), 1, out);
        return;
    case Kind::Sum: {
        for (std::size_t i = 0; i < t.kids().size(); ++i) {
            if (i) out += " + ";
            if (!t.coefs()[i].is_one()) {
                out += scalar_literal(t.coefs()[i]);
                out += '*';
                show_at(t.kid(i), 1, out);
            } else {
                show_at(t.kid(i), 1, out);
            }
        }
        if (t.kids().empty()) out += "zero";
        return;
    }
    case Kind::If:
        out += "if ";
        show_at(t.kid(0), 0, out);
        out += " then ";
        show_at(t.kid(1), 0, out);
        out += " else ";
        show_at(t.kid(2), 0, out);
        return;
    }
    (void)ctx;
}

}  // namespace

std::string Term::str() const {
    std::string out;
    show(*this, 0, out);
    return out;
}

}  // namespace alc
