#include "alc/document.hpp"

#include "alc/equational.hpp"
#include "alc/parser.hpp"
#include "alc/prelude.hpp"

#include <boost/algorithm/string.hpp>

#include <fstream>
#include <sstream>

namespace alc {

const char* expect_name(ExpectKind k) {
    switch (k) {
    case ExpectKind::Type: return "expect-type";
    case ExpectKind::Normal: return "expect-normal";
    case ExpectKind::Fuel: return "expect-fuel";
    case ExpectKind::Equal: return "expect-eq";
    case ExpectKind::NotEqual: return "expect-neq";
    case ExpectKind::Denote: return "expect-denote";
    case ExpectKind::Error: return "expect-error";
    }
    return "?";
}

DocumentError::DocumentError(std::string path, std::size_t line, const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message), path_(std::move(path)), line_(line) {}

ParseOptions parse_options(const Settings& s) { return s.prelude ? prelude_parse_options() : ParseOptions{}; }

Term read_term(std::string_view src, const Settings& s) {
    Term t = parse_term(src, parse_options(s));
    for (auto it = s.lets.rbegin(); it != s.lets.rend(); ++it)
        if (occurs_free(it->first, t)) t = substitute(t, it->first, it->second);
    return s.prelude ? with_prelude(t) : t;
}

std::vector<SemValue> parse_points(const std::string& list) {
    std::vector<SemValue> out;
    std::vector<std::string> parts;
    if (!boost::trim_copy(list).empty()) boost::split(parts, list, boost::is_any_of(","));
    for (auto& p : parts) {
        auto v = parse_point(boost::trim_copy(p));
        if (!v) throw std::invalid_argument("bad query point '" + boost::trim_copy(p) + "'");
        out.push_back(*v);
    }
    return out;
}

RewriteOptions rewrite_options(const Settings& s) { return RewriteOptions{s.mode, s.congruence, false}; }

SemOptions sem_options(const Settings& s) {
    SemOptions o;
    o.model = s.model;
    o.mode = s.mode;
    o.fuel = s.fuel;
    return o;
}

std::string denotation_text(const Denotation& d, const std::vector<SemValue>& at) {
    if (at.empty() || d.element.is_bottom()) return d.str();
    std::string out;
    bool lost = false;
    for (const auto& x : at) {
        Coef c = d.element.at(x);
        lost = lost || c.is_omega();
        if (!out.empty()) out += ", ";
        out += x.str() + " -> " + c.str();
    }
    if (lost && d.approximate) out += " (approximate)";
    return out;
}

namespace {

struct Loader {
    std::string path;
    Settings settings;
    std::vector<Expectation> pending;
    Document doc;

    [[noreturn]] void fail(std::size_t line, const std::string& msg) const { throw DocumentError(path, line, msg); }

    Term term_at(const std::string& src, std::size_t line) const {
        try {
            return read_term(src, settings);
        } catch (const ParseError& e) {
            fail(line + e.line() - 1, e.what());
        }
    }

    Type type_at(const std::string& src, std::size_t line) const {
        try {
            return parse_type(src, parse_options(settings));
        } catch (const ParseError& e) {
            fail(line, e.what());
        }
    }

    void directive(const std::string& text, std::size_t line) {
        std::string name = text.substr(0, text.find_first_of(" \t"));
        std::string arg = boost::trim_copy(text.substr(name.size()));
        auto want_arg = [&] {
            if (arg.empty()) fail(line, "#" + name + " needs an argument");
        };
        if (name == "use") {
            if (arg != "prelude") fail(line, "unknown library '" + arg + "'");
            settings.prelude = true;
        } else if (name == "mode") {
            if (arg == "strict") settings.mode = Mode::Strict;
            else if (arg == "weak") settings.mode = Mode::Weak;
            else fail(line, "mode is strict or weak");
        } else if (name == "model") {
            if (arg == "strong") settings.model = Model::Strong;
            else if (arg == "weak") settings.model = Model::Weak;
            else fail(line, "model is strong or weak");
        } else if (name == "congruence") {
            if (arg == "cbv") settings.congruence = Congruence::CallByValue;
            else if (arg == "full") settings.congruence = Congruence::Full;
            else fail(line, "congruence is cbv or full");
        } else if (name == "fuel") {
            try {
                settings.fuel = std::stoul(arg);
            } catch (const std::exception&) {
                fail(line, "fuel must be a positive integer");
            }
        } else if (name == "ctx") {
            settings.ctx = Context{};
            std::vector<std::string> parts;
            if (!arg.empty()) boost::split(parts, arg, boost::is_any_of(","));
            for (auto& p : parts) {
                auto colon = p.find(':');
                if (colon == std::string::npos) fail(line, "context entries look like x : A");
                settings.ctx.push(boost::trim_copy(p.substr(0, colon)), type_at(p.substr(colon + 1), line));
            }
        } else if (name == "let") {
            auto eq = arg.find('=');
            if (eq == std::string::npos) fail(line, "#let name = term");
            std::string x = boost::trim_copy(arg.substr(0, eq));
            settings.lets.emplace_back(x, term_at(arg.substr(eq + 1), line));
        } else if (name == "at") {
            try {
                settings.at = parse_points(arg);
            } catch (const std::invalid_argument& e) {
                fail(line, e.what());
            }
        } else if (name == "expect-type") {
            want_arg();
            pending.push_back({ExpectKind::Type, arg, line});
        } else if (name == "expect-normal") {
            want_arg();
            pending.push_back({ExpectKind::Normal, arg, line, term_at(arg, line)});
        } else if (name == "expect-fuel") {
            pending.push_back({ExpectKind::Fuel, "", line});
        } else if (name == "expect-eq") {
            want_arg();
            pending.push_back({ExpectKind::Equal, arg, line, term_at(arg, line)});
        } else if (name == "expect-neq") {
            want_arg();
            pending.push_back({ExpectKind::NotEqual, arg, line, term_at(arg, line)});
        } else if (name == "expect-denote") {
            want_arg();
            pending.push_back({ExpectKind::Denote, arg, line});
        } else if (name == "expect-error") {
            pending.push_back({ExpectKind::Error, "", line});
        } else {
            fail(line, "unknown directive #" + name);
        }
    }

    void item(const std::string& src, std::size_t line) {
        Item it;
        it.source = boost::trim_copy(src);
        it.line = line;
        it.term = term_at(src, line);
        it.settings = settings;
        it.expects = std::move(pending);
        pending.clear();
        doc.items.push_back(std::move(it));
    }
};

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

}  // namespace

Document parse_document(std::string_view text, std::string path, Settings base) {
    Loader ld{path, std::move(base), {}, {}};
    ld.doc.path = path;
    std::string buf;
    std::size_t start = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        std::string line = raw;
        if (auto c = line.find("--"); c != std::string::npos) line.erase(c);
        std::string trimmed = boost::trim_copy(line);
        if (!trimmed.empty() && trimmed[0] == '#') {
            if (!blank(buf)) ld.fail(lineno, "directive inside an unterminated item (missing ';'?)");
            ld.directive(trimmed.substr(1), lineno);
            continue;
        }
        for (char ch : line) {
            if (ch == ';') {
                if (!blank(buf)) ld.item(buf, start);
                buf.clear();
                continue;
            }
            if (blank(buf)) {
                if (ch == ' ' || ch == '\t' || ch == '\r') continue;
                buf.clear();
                start = lineno;
            }
            buf += ch;
        }
        if (!blank(buf)) buf += '\n';
    }
    if (!blank(buf)) ld.item(buf, start);
    if (!ld.pending.empty()) ld.fail(ld.pending.back().line, "expectation with no item after it");
    return std::move(ld.doc);
}

Document load_document(const std::filesystem::path& file, Settings base) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DocumentError(file.string(), 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), file.string(), std::move(base));
}

// ---------------------------------------------------------------------------

namespace {

CheckOutcome run_expect(const Item& item, const Expectation& e) {
    const Settings& s = item.settings;
    CheckOutcome out{e.line, std::string(expect_name(e.kind)) + " " + e.arg, false, {}};
    boost::trim(out.what);
    try {
        switch (e.kind) {
        case ExpectKind::Type: {
            Type want = parse_type(e.arg, parse_options(s));
            Type got = infer(s.ctx, item.term);
            out.ok = got == want;
            out.detail = "type " + got.str();
            break;
        }
        case ExpectKind::Normal: {
            Trace tr = normalize(item.term, rewrite_options(s), s.fuel);
            Term want = canonical(e.term, s.mode);
            out.ok = tr.normal() && alpha_equal(tr.result(), want);
            out.detail = (tr.normal() ? "normal form " : "fuel exhausted at ") + tr.result().str();
            break;
        }
        case ExpectKind::Fuel: {
            Trace tr = normalize(item.term, rewrite_options(s), s.fuel);
            out.ok = !tr.normal();
            out.detail = tr.normal() ? "normal form " + tr.result().str() : "fuel exhausted";
            break;
        }
        case ExpectKind::Equal:
        case ExpectKind::NotEqual: {
            Type ty = infer(s.ctx, item.term);
            EqVerdict v = ax_equiv(s.ctx, item.term, e.term, ty, s.mode, s.fuel);
            Verdict want = e.kind == ExpectKind::Equal ? Verdict::Equal : Verdict::NotEqual;
            out.ok = v.verdict == want;
            out.detail = std::string(verdict_name(v.verdict)) + ": " + v.reason;
            break;
        }
        case ExpectKind::Denote: {
            Denotation d = denote_computation({}, item.term, sem_options(s));
            std::string got = denotation_text(d, s.at);
            out.ok = got == e.arg;
            out.detail = got;
            break;
        }
        case ExpectKind::Error: {
            try {
                Type ty = infer(s.ctx, item.term);
                out.detail = "typechecks at " + ty.str();
            } catch (const TypeError& err) {
                out.ok = true;
                out.detail = err.what();
            }
            break;
        }
        }
    } catch (const std::exception& err) {
        out.ok = false;
        out.detail = err.what();
    }
    return out;
}

}  // namespace

std::vector<CheckOutcome> check_item(const Item& item) {
    std::vector<CheckOutcome> outs;
    if (item.expects.empty()) {
        CheckOutcome o{item.line, "typecheck", false, {}};
        try {
            o.detail = infer(item.settings.ctx, item.term).str();
            o.ok = true;
        } catch (const std::exception& err) {
            o.detail = err.what();
        }
        outs.push_back(o);
    }
    for (const auto& e : item.expects) outs.push_back(run_expect(item, e));
    return outs;
}

std::vector<CheckOutcome> check_document(const Document& doc) {
    std::vector<CheckOutcome> outs;
    for (const auto& it : doc.items) {
        auto r = check_item(it);
        outs.insert(outs.end(), r.begin(), r.end());
    }
    return outs;
}

}  // namespace alc
