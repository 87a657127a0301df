#include "alc/parser.hpp"

#include <cctype>
#include <set>

namespace alc {

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i];
    }
    return s;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t col, std::string found, std::vector<std::string> expected)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": unexpected " +
                         found + ", expected " + join(expected)),
      line_(line), col_(col), found_(std::move(found)), expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        unsigned char c = src[i];
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {  // comment
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        std::size_t l = line, cl = col;
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
                ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Sym, "->", l, cl});
            advance(2);
        } else if (src.substr(i, 2) == "\xCE\xBB") {  // UTF-8 lambda
            out.push_back({Tok::Sym, "\\", l, cl});
            advance(2);
        } else if (std::string_view("\\.:()[]<>,+-*!{}/").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), l, cl});
            advance(1);
        } else {
            throw ParseError(l, cl, "character '" + std::string(1, static_cast<char>(c)) + "'", {"term"});
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::set<std::string> kKeywords = {"star", "zero", "tt",  "ff", "succ", "pred", "iszero", "fst",
                                         "snd",  "if",   "then", "else", "Y"};

bool is_numeral(const std::string& s) {
    if (s.size() < 2 || s[0] != 'n') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view src, const ParseOptions& opts) : toks_(lex(src)), opts_(opts) {}

    Term whole_term() {
        Term t = term();
        expect_end();
        return t;
    }
    Type whole_type() {
        Type t = type();
        expect_end();
        return t;
    }
    Scalar whole_scalar() {
        Scalar s = peek_sym("{") ? braced_scalar() : scalar_expr();
        expect_end();
        return s;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& opts_;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool peek_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool peek_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, found, std::move(expected));
    }
    void expect_sym(const char* s) {
        if (!peek_sym(s)) fail({std::string("'") + s + "'"});
        ++pos_;
    }
    void expect_ident(const char* s) {
        if (!peek_ident(s)) fail({std::string("'") + s + "'"});
        ++pos_;
    }
    void expect_end() {
        if (peek().kind != Tok::End) fail({"end of input"});
    }

    // ---- types
    Type type() {
        Type dom = prod_type();
        if (peek_sym("->")) {
            ++pos_;
            return Type::arrow(dom, type());
        }
        return dom;
    }
    Type prod_type() {
        Type t = monad_type();
        while (peek_sym("*")) {
            ++pos_;
            t = Type::prod(t, monad_type());
        }
        return t;
    }
    Type monad_type() {
        if (peek_ident("M")) {
            ++pos_;
            return Type::monad(monad_type());
        }
        return atom_type();
    }
    Type atom_type() {
        if (peek_sym("(")) {
            ++pos_;
            Type t = type();
            expect_sym(")");
            return t;
        }
        if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail({"type"});
        std::string n = toks_[pos_++].text;
        if (n == "T") return Type::top();
        if (n == "bit") return Type::bit();
        if (n == "int") return Type::integer();
        if (auto it = opts_.type_aliases.find(n); it != opts_.type_aliases.end()) return it->second;
        return Type::base(n);
    }

    // ---- scalars
    Scalar braced_scalar() {
        expect_sym("{");
        Scalar s = scalar_expr();
        expect_sym("}");
        return s;
    }
    Scalar scalar_expr() {
        Scalar s = scalar_term();
        while (peek_sym("+") || peek_sym("-")) {
            bool minus = peek().text == "-";
            ++pos_;
            Scalar r = scalar_term();
            s = minus ? s - r : s + r;
        }
        return s;
    }
    Scalar scalar_term() {
        Scalar s = scalar_factor();
        while (peek_sym("*") || peek_sym("/")) {
            bool div = peek().text == "/";
            ++pos_;
            Scalar r = scalar_factor();
            if (div) {
                if (r.is_zero()) fail({"nonzero divisor"});
                s = s / r;
            } else {
                s = s * r;
            }
        }
        return s;
    }
    Scalar scalar_factor() {
        if (peek_sym("-")) {
            ++pos_;
            return -scalar_factor();
        }
        if (peek_sym("(")) {
            ++pos_;
            Scalar s = scalar_expr();
            expect_sym(")");
            return s;
        }
        if (peek().kind == Tok::Int) {
            Rat::Int n(toks_[pos_++].text);
            return Scalar(Rat(n, 1));
        }
        if (peek_ident("i")) {
            ++pos_;
            return Scalar::i();
        }
        if (peek_ident("sqrt2")) {
            ++pos_;
            return Scalar::sqrt2();
        }
        fail({"scalar"});
    }

    // ---- terms
    Term term() {
        if (peek_sym("\\")) return lambda();
        if (peek_ident("if")) {
            ++pos_;
            Term c = term();
            expect_ident("then");
            Term a = term();
            expect_ident("else");
            Term b = term();
            return Term::ifz(c, a, b);
        }
        return sum();
    }

    Term lambda() {
        expect_sym("\\");
        std::vector<std::pair<std::string, std::optional<Type>>> binders;
        do {
            if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail({"binder"});
            std::string x = toks_[pos_++].text;
            std::optional<Type> ann;
            if (peek_sym(":")) {
                ++pos_;
                ann = type();
            }
            binders.emplace_back(std::move(x), std::move(ann));
        } while (!peek_sym("."));
        expect_sym(".");
        Term body = term();
        for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(it->first, it->second, body);
        return body;
    }

    Term sum() {
        std::vector<Term::Entry> es;
        es.push_back({Scalar::one(), smul()});
        while (peek_sym("+") || peek_sym("-")) {
            bool minus = peek().text == "-";
            ++pos_;
            es.push_back({minus ? -Scalar::one() : Scalar::one(), smul()});
        }
        if (es.size() == 1) return es[0].base;
        return Term::sum(std::move(es));
    }

    Term smul() {
        if (peek_sym("{") || peek().kind == Tok::Int) {
            Scalar s = peek_sym("{") ? braced_scalar() : Scalar(Rat(Rat::Int(toks_[pos_++].text), 1));
            expect_sym("*");
            return Term::scal(s, smul());
        }
        return app();
    }

    bool starts_prefix() const {
        const Token& t = peek();
        if (t.kind == Tok::Ident) return t.text != "then" && t.text != "else" && t.text != "if";
        if (t.kind == Tok::Sym) return t.text == "(" || t.text == "[" || t.text == "<" || t.text == "!";
        return false;
    }

    Term app() {
        if (!starts_prefix()) fail({"term"});
        Term t = prefix();
        while (starts_prefix()) t = Term::app(t, prefix());
        return t;
    }

    Term prefix() {
        if (peek_sym("!")) {
            ++pos_;
            return Term::cocanon(prefix());
        }
        if (peek().kind == Tok::Ident) {
            const std::string& w = peek().text;
            if (w == "succ") { ++pos_; return Term::succ(prefix()); }
            if (w == "pred") { ++pos_; return Term::pred(prefix()); }
            if (w == "iszero") { ++pos_; return Term::iszero(prefix()); }
            if (w == "fst") { ++pos_; return Term::fst(prefix()); }
            if (w == "snd") { ++pos_; return Term::snd(prefix()); }
            if (w == "Y") { ++pos_; return Term::fix(prefix()); }
        }
        return atom();
    }

    Term atom() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            std::string w = t.text;
            if (w == "then" || w == "else" || w == "if") fail({"term"});
            ++pos_;
            if (w == "star") return Term::star();
            if (w == "zero") return Term::zero();
            if (w == "tt") return Term::tt();
            if (w == "ff") return Term::ff();
            if (is_numeral(w)) return Term::numeral(static_cast<unsigned>(std::stoul(w.substr(1))));
            return Term::var(w);
        }
        if (peek_sym("[")) {
            ++pos_;
            Term s = term();
            expect_sym("]");
            return Term::canon(s);
        }
        if (peek_sym("<")) {
            ++pos_;
            Term a = term();
            expect_sym(",");
            Term b = term();
            expect_sym(">");
            return Term::pair(a, b);
        }
        if (peek_sym("(")) {
            ++pos_;
            Term s = term();
            if (peek_sym(":")) {
                ++pos_;
                Type ty = type();
                expect_sym(")");
                if (!s.is(Kind::Zero)) fail({"')' (type ascription is only allowed on zero)"});
                return Term::zero(ty);
            }
            expect_sym(")");
            return s;
        }
        fail({"term"});
    }
};

}  // namespace

Term parse_term(std::string_view src, const ParseOptions& opts) { return Parser(src, opts).whole_term(); }
Type parse_type(std::string_view src, const ParseOptions& opts) { return Parser(src, opts).whole_type(); }
Scalar parse_scalar(std::string_view src) {
    ParseOptions opts;
    return Parser(src, opts).whole_scalar();
}

}  // namespace alc
