// Command line front end; talks to the library only through alc.h.
#include "alc/alc.h"

#include <CLI11.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kError = 1, kFuel = 2, kRefuted = 3 };

struct CStr {
    char* p = nullptr;
    ~CStr() { alc_string_free(p); }
    char** out() { return &p; }
    std::string str() const { return p ? p : ""; }
};

using Session = std::unique_ptr<alc_session, decltype(&alc_session_free)>;
using TermPtr = std::unique_ptr<alc_term, decltype(&alc_term_free)>;
using DocPtr = std::unique_ptr<alc_document, decltype(&alc_document_free)>;

struct Config {
    std::string mode = "weak";
    std::string model = "strong";
    std::string congruence = "cbv";
    std::string ring = "auto";
    std::string format = "pretty";
    std::size_t fuel = 10000;
    std::vector<std::string> ctx;
    std::string at;
    bool prelude = false;
};

bool tagged(const Config& c) { return c.format == "tagged"; }

int exit_for(alc_status s) {
    switch (s) {
    case ALC_OK: return kOk;
    case ALC_ERR_FUEL:
    case ALC_UNKNOWN: return kFuel;
    case ALC_NOT_EQUAL:
    case ALC_NOT_JOINED:
    case ALC_CHECK_FAILED: return kRefuted;
    default: return kError;
    }
}

// Worst outcome wins: errors, then refutations, then fuel.
int worse(int a, int b) {
    auto rank = [](int e) { return e == kError ? 3 : e == kRefuted ? 2 : e == kFuel ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

std::string upper_tag(alc_status s) {
    std::string t = alc_status_name(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return c == '-' ? '_' : std::toupper(c); });
    return t;
}

void emit(const Config& cfg, const std::string& tag, const std::string& payload) {
    if (tagged(cfg)) {
        std::string flat = payload;
        std::replace(flat.begin(), flat.end(), '\n', ' ');
        while (!flat.empty() && flat.back() == ' ') flat.pop_back();
        std::cout << tag << '\t' << flat << '\n';
    } else {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    }
}

int report_error(const Config& cfg, alc_session* s, alc_status st) {
    std::string msg = alc_last_error(s);
    if (tagged(cfg)) {
        std::cout << upper_tag(st) << '\t' << msg << '\t' << alc_last_hint(s) << '\n';
    } else {
        std::cerr << "error: " << msg << '\n';
        if (*alc_last_hint(s)) std::cerr << "hint: " << alc_last_hint(s) << '\n';
    }
    return exit_for(st) == kOk ? kError : exit_for(st);
}

// Builds a session from the flags; returns nullopt-like empty pointer on error.
Session make_session(const Config& cfg, int& code) {
    alc_session* raw = nullptr;
    alc_session_new(&raw);
    Session s(raw, &alc_session_free);
    alc_session_set_mode(raw, cfg.mode == "strict" ? ALC_MODE_STRICT : ALC_MODE_WEAK);
    alc_session_set_model(raw, cfg.model == "weak" ? ALC_MODEL_WEAK : ALC_MODEL_STRONG);
    alc_session_set_congruence(raw, cfg.congruence == "full" ? ALC_FULL : ALC_CBV);
    alc_session_set_ring(raw, cfg.ring == "rat" ? ALC_RING_RAT : cfg.ring == "quad" ? ALC_RING_QUAD : ALC_RING_AUTO);
    alc_session_set_fuel(raw, cfg.fuel);
    alc_session_use_prelude(raw, cfg.prelude);
    code = kOk;
    if (alc_status st = alc_session_set_points(raw, cfg.at.c_str()); st != ALC_OK) code = report_error(cfg, raw, st);
    for (const auto& b : cfg.ctx) {
        if (code != kOk) break;
        auto colon = b.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --ctx expects x : A, got '" << b << "'\n";
            code = kError;
            break;
        }
        std::string x = b.substr(0, colon);
        x.erase(std::remove_if(x.begin(), x.end(), ::isspace), x.end());
        if (alc_status st = alc_session_declare(raw, x.c_str(), b.substr(colon + 1).c_str()); st != ALC_OK)
            code = report_error(cfg, raw, st);
    }
    return s;
}

// Terms named by the input: every item of a file, or one inline term.
std::vector<TermPtr> load_terms(const Config& cfg, alc_session* s, const std::string& input, int& code) {
    std::vector<TermPtr> out;
    code = kOk;
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        alc_document* d = nullptr;
        if (alc_status st = alc_document_load(s, input.c_str(), &d); st != ALC_OK) {
            code = report_error(cfg, s, st);
            return out;
        }
        DocPtr doc(d, &alc_document_free);
        for (std::size_t i = 0; i < alc_document_size(d); ++i) {
            alc_term* t = nullptr;
            alc_document_item(s, d, i, &t);
            out.emplace_back(t, &alc_term_free);
        }
        return out;
    }
    alc_term* t = nullptr;
    if (alc_status st = alc_parse(s, input.c_str(), &t); st != ALC_OK) {
        code = report_error(cfg, s, st);
        return out;
    }
    out.emplace_back(t, &alc_term_free);
    return out;
}

void warn_strict_fix(const alc_term* t) {
    if (alc_term_is_strict(t) && alc_term_has_fix(t))
        std::cerr << "warning: strict mode is inconsistent in the presence of Y; prefer --mode weak\n";
}

std::string label(alc_session* s, const alc_term* t) {
    CStr src;
    alc_term_str(s, t, src.out());
    std::string l = alc_term_line(t) ? "line " + std::to_string(alc_term_line(t)) + ": " : "";
    return l + src.str();
}

int cmd_typecheck(const Config& cfg, alc_session* s, const std::vector<TermPtr>& ts) {
    int code = kOk;
    for (const auto& t : ts) {
        CStr ty;
        alc_status st = alc_typecheck(s, t.get(), ty.out());
        if (st != ALC_OK) {
            code = worse(code, report_error(cfg, s, st));
            continue;
        }
        emit(cfg, "TYPE", tagged(cfg) ? ty.str() : label(s, t.get()) + " : " + ty.str());
    }
    return code;
}

int cmd_normalize(const Config& cfg, alc_session* s, const std::vector<TermPtr>& ts, bool trace) {
    int code = kOk;
    for (const auto& t : ts) {
        warn_strict_fix(t.get());
        CStr res, tr;
        std::size_t steps = 0;
        alc_status st = alc_normalize(s, t.get(), res.out(), tr.out(), &steps);
        if (st != ALC_OK && st != ALC_ERR_FUEL) {
            code = worse(code, report_error(cfg, s, st));
            continue;
        }
        std::string tag = st == ALC_OK ? "NORMAL" : "FUEL";
        if (trace) {
            if (tagged(cfg)) {
                std::string lines = tr.str();
                std::size_t a = 0;
                while (a < lines.size()) {
                    std::size_t b = lines.find('\n', a);
                    if (b == std::string::npos) b = lines.size();
                    if (b > a) std::cout << "STEP\t" << lines.substr(a, b - a) << '\n';
                    a = b + 1;
                }
                emit(cfg, tag, res.str());
            } else {
                std::cout << tr.str();
            }
        } else if (tagged(cfg)) {
            emit(cfg, tag, res.str());
        } else {
            std::cout << res.str() << '\n';
            if (st == ALC_ERR_FUEL) std::cerr << "fuel exhausted after " << steps << " steps\n";
        }
        code = worse(code, exit_for(st));
    }
    return code;
}

int cmd_eq(const Config& cfg, alc_session* s, const std::string& lhs, const std::string& rhs, bool join) {
    int code = kOk;
    auto a = load_terms(cfg, s, lhs, code);
    if (code != kOk) return code;
    auto b = load_terms(cfg, s, rhs, code);
    if (code != kOk) return code;
    if (a.size() != 1 || b.size() != 1) {
        std::cerr << "error: eq compares exactly one term on each side\n";
        return kError;
    }
    warn_strict_fix(a[0].get());
    warn_strict_fix(b[0].get());
    CStr detail;
    alc_status st = join ? alc_join(s, a[0].get(), b[0].get(), detail.out())
                         : alc_equiv(s, a[0].get(), b[0].get(), detail.out());
    if (exit_for(st) == kError) return report_error(cfg, s, st);
    std::string tag = st == ALC_OK ? (join ? "JOINED" : "EQUAL") : upper_tag(st);
    emit(cfg, tag, detail.str());
    return exit_for(st);
}

int cmd_denote(const Config& cfg, alc_session* s, const std::vector<TermPtr>& ts) {
    int code = kOk;
    for (const auto& t : ts) {
        CStr out;
        int approx = 0;
        alc_status st = alc_denote(s, t.get(), out.out(), &approx);
        if (st != ALC_OK) {
            code = worse(code, report_error(cfg, s, st));
            continue;
        }
        emit(cfg, approx ? "APPROX" : "DENOTE", out.str());
    }
    return code;
}

int cmd_demo(const Config& cfg, alc_session* s, const std::string& name) {
    CStr out;
    alc_status st = alc_demo(s, name.c_str(), out.out());
    if (exit_for(st) == kError) return report_error(cfg, s, st);
    if (tagged(cfg)) {
        std::cout << "DEMO\t" << name << '\n';
        std::string text = out.str();
        std::size_t a = 0;
        while (a < text.size()) {
            std::size_t b = text.find('\n', a);
            if (b == std::string::npos) b = text.size();
            if (b > a) std::cout << "LINE\t" << text.substr(a, b - a) << '\n';
            a = b + 1;
        }
        std::cout << (st == ALC_OK ? "OK" : upper_tag(st)) << '\t' << name << '\n';
    } else {
        std::cout << out.str();
    }
    return exit_for(st);
}

int cmd_check_all(const Config& cfg, alc_session* s, const std::vector<std::string>& paths) {
    std::vector<std::filesystem::path> files;
    for (const auto& p : paths) {
        std::error_code ec;
        if (std::filesystem::is_directory(p, ec)) {
            for (const auto& e : std::filesystem::recursive_directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".alc") files.push_back(e.path());
        } else {
            files.emplace_back(p);
        }
    }
    std::sort(files.begin(), files.end());
    int code = kOk;
    std::size_t total_fail = 0, total = 0;
    for (const auto& f : files) {
        alc_document* d = nullptr;
        if (alc_status st = alc_document_load(s, f.string().c_str(), &d); st != ALC_OK) {
            code = worse(code, report_error(cfg, s, st));
            ++total_fail;
            continue;
        }
        DocPtr doc(d, &alc_document_free);
        CStr report;
        std::size_t fails = 0;
        alc_status st = alc_document_check(s, d, report.out(), &fails);
        if (exit_for(st) == kError) {
            code = worse(code, report_error(cfg, s, st));
            continue;
        }
        std::string text = report.str();
        total += std::count(text.begin(), text.end(), '\n');
        total_fail += fails;
        if (tagged(cfg)) {
            std::cout << text;
        } else {
            std::cout << f.string() << ": " << (fails ? std::to_string(fails) + " failed" : "ok") << '\n';
            std::size_t a = 0;
            while (a < text.size()) {
                std::size_t b = text.find('\n', a);
                if (text.compare(a, 4, "FAIL") == 0) std::cout << "  " << text.substr(a, b - a) << '\n';
                a = b + 1;
            }
        }
        code = worse(code, exit_for(st));
    }
    emit(cfg, total_fail ? "FAILED" : "OK",
         std::to_string(total - std::min(total, total_fail)) + "/" + std::to_string(total) + " checks passed in " +
             std::to_string(files.size()) + " files");
    return code;
}

// ---------------------------------------------------------------------------
// REPL

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Pulls "--flag value" out of a command line, returning the value.
std::optional<std::string> take_flag(std::string& line, const std::string& flag) {
    auto p = line.find(flag + " ");
    if (p == std::string::npos) return std::nullopt;
    auto v0 = line.find_first_not_of(' ', p + flag.size());
    auto v1 = line.find(' ', v0);
    std::string v = line.substr(v0, v1 == std::string::npos ? std::string::npos : v1 - v0);
    line.erase(p, (v1 == std::string::npos ? line.size() : v1) - p);
    return v;
}

void repl_help() {
    std::cout << "  term                normalize\n"
                 "  :t term             type\n"
                 "  :n term             normalize\n"
                 "  :trace term         numbered reduction steps\n"
                 "  :eq s == t          axiomatic equivalence\n"
                 "  :join s == t        common reduct search\n"
                 "  :denote [--model strong|weak] [--at 0,1] term\n"
                 "  :let x = term       bind a closed term\n"
                 "  :ctx x : A          declare a free variable\n"
                 "  :mode strict|weak   :model strong|weak   :congruence cbv|full\n"
                 "  :fuel N   :use prelude   :show   :clear   :help   :quit\n";
}

int repl(Config cfg) {
    int code = kOk;
    Session sess = make_session(cfg, code);
    if (code != kOk) return code;
    alc_session* s = sess.get();
    bool interactive = isatty(STDIN_FILENO);
    if (interactive) std::cout << "alc " << alc_version() << ", :help for commands\n";
    std::string line;
    while (true) {
        if (interactive) std::cout << "alc> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        line = trim(line);
        if (line.empty() || line.rfind("--", 0) == 0) continue;
        std::string cmd, rest = line;
        if (line[0] == ':') {
            auto sp = line.find(' ');
            cmd = line.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
            rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        }
        auto one = [&](const std::string& src) -> std::vector<TermPtr> {
            int c = kOk;
            auto ts = load_terms(cfg, s, src, c);
            return ts;
        };
        if (cmd == "quit" || cmd == "q") break;
        if (cmd == "help") {
            repl_help();
        } else if (cmd == "t" || cmd == "type") {
            cmd_typecheck(cfg, s, one(rest));
        } else if (cmd.empty() || cmd == "n") {
            cmd_normalize(cfg, s, one(rest), false);
        } else if (cmd == "trace") {
            cmd_normalize(cfg, s, one(rest), true);
        } else if (cmd == "eq" || cmd == "join") {
            auto p = rest.find("==");
            if (p == std::string::npos) {
                std::cerr << "error: write :" << cmd << " s == t\n";
                continue;
            }
            cmd_eq(cfg, s, trim(rest.substr(0, p)), trim(rest.substr(p + 2)), cmd == "join");
        } else if (cmd == "denote") {
            auto model = take_flag(rest, "--model");
            auto at = take_flag(rest, "--at");
            if (model) alc_session_set_model(s, *model == "weak" ? ALC_MODEL_WEAK : ALC_MODEL_STRONG);
            if (alc_status st = alc_session_set_points(s, at ? at->c_str() : ""); st != ALC_OK) {
                report_error(cfg, s, st);
                continue;
            }
            cmd_denote(cfg, s, one(trim(rest)));
            alc_session_set_model(s, cfg.model == "weak" ? ALC_MODEL_WEAK : ALC_MODEL_STRONG);
            alc_session_set_points(s, cfg.at.c_str());
        } else if (cmd == "let") {
            auto p = rest.find('=');
            if (p == std::string::npos) {
                std::cerr << "error: write :let x = term\n";
                continue;
            }
            std::string x = trim(rest.substr(0, p));
            if (alc_status st = alc_session_let(s, x.c_str(), trim(rest.substr(p + 1)).c_str()); st != ALC_OK)
                report_error(cfg, s, st);
        } else if (cmd == "ctx") {
            auto p = rest.find(':');
            if (p == std::string::npos) {
                std::cerr << "error: write :ctx x : A\n";
                continue;
            }
            std::string x = trim(rest.substr(0, p));
            if (alc_status st = alc_session_declare(s, x.c_str(), rest.substr(p + 1).c_str()); st != ALC_OK)
                report_error(cfg, s, st);
        } else if (cmd == "mode") {
            if (rest != "strict" && rest != "weak") {
                std::cerr << "error: mode is strict or weak\n";
                continue;
            }
            cfg.mode = rest;
            alc_session_set_mode(s, rest == "strict" ? ALC_MODE_STRICT : ALC_MODE_WEAK);
        } else if (cmd == "model") {
            if (rest != "strong" && rest != "weak") {
                std::cerr << "error: model is strong or weak\n";
                continue;
            }
            cfg.model = rest;
            alc_session_set_model(s, rest == "weak" ? ALC_MODEL_WEAK : ALC_MODEL_STRONG);
        } else if (cmd == "congruence") {
            alc_session_set_congruence(s, rest == "full" ? ALC_FULL : ALC_CBV);
        } else if (cmd == "fuel") {
            try {
                std::size_t n = std::stoul(rest);
                if (alc_session_set_fuel(s, n) != ALC_OK) throw std::invalid_argument("zero");
            } catch (const std::exception&) {
                std::cerr << "error: fuel is a positive integer\n";
            }
        } else if (cmd == "use") {
            if (rest == "prelude") alc_session_use_prelude(s, 1);
            else std::cerr << "error: only the prelude can be used\n";
        } else if (cmd == "show") {
            CStr d;
            alc_session_describe(s, d.out());
            std::cout << d.str();
        } else if (cmd == "clear") {
            alc_session_clear(s);
        } else {
            std::cerr << "error: unknown command :" << cmd << " (:help lists them)\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Typechecker, rewriter, equivalence checker and evaluator for the algebraic lambda-calculus"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* env = std::getenv("ALC_FUEL")) {
        try {
            cfg.fuel = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring ALC_FUEL='" << env << "'\n";
        }
    }
    app.add_option("--mode", cfg.mode, "strict or weak module laws")->check(CLI::IsMember({"strict", "weak"}));
    app.add_option("--model", cfg.model, "strong or weak convergence")->check(CLI::IsMember({"strong", "weak"}));
    app.add_option("--congruence", cfg.congruence, "cbv: no reduction under lambda or [ ]; full: everywhere")
        ->check(CLI::IsMember({"cbv", "full"}));
    app.add_option("--ring", cfg.ring, "scalar ring: rat, quad or auto")->check(CLI::IsMember({"auto", "rat", "quad"}));
    app.add_option("--fuel", cfg.fuel, "step budget (default 10000, or ALC_FUEL)")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "pretty or tagged")->check(CLI::IsMember({"pretty", "tagged"}));
    app.add_option("--ctx", cfg.ctx, "free variable declaration 'x : A' (repeatable)")->allow_extra_args(false);
    app.add_option("--at", cfg.at, "query points for denote, e.g. 0,1,2");
    app.add_flag("--prelude", cfg.prelude, "make the prelude names available");

    std::string input, rhs, demo_name;
    std::vector<std::string> paths;
    auto* typecheck = app.add_subcommand("typecheck", "infer the type of each term");
    typecheck->add_option("input", input, "file or inline term")->required();
    auto* normalize = app.add_subcommand("normalize", "reduce to normal form");
    normalize->add_option("input", input, "file or inline term")->required();
    auto* trace = app.add_subcommand("trace", "print every reduction step");
    trace->add_option("input", input, "file or inline term")->required();
    auto* eq = app.add_subcommand("eq", "decide axiomatic equivalence (sound, incomplete)");
    eq->add_option("lhs", input, "term")->required();
    eq->add_option("rhs", rhs, "term")->required();
    auto* join = app.add_subcommand("join", "search for a common reduct");
    join->add_option("lhs", input, "term")->required();
    join->add_option("rhs", rhs, "term")->required();
    auto* denote = app.add_subcommand("denote", "denotation in the chosen model");
    denote->add_option("input", input, "file or inline term")->required();
    auto* demo = app.add_subcommand("demo", "canned scenarios");
    demo->add_option("name", demo_name, "broken, quantum or pow")->required()->check(
        CLI::IsMember({"broken", "quantum", "pow"}));
    auto* check_all = app.add_subcommand("check-all", "run the expectations in .alc files");
    check_all->add_option("paths", paths, "files or directories")->required();
    auto* repl_cmd = app.add_subcommand("repl", "interactive loop");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kError;
    }

    if (*repl_cmd) return repl(cfg);

    int code = kOk;
    Session sess = make_session(cfg, code);
    if (code != kOk) return code;
    alc_session* s = sess.get();

    if (*demo) return cmd_demo(cfg, s, demo_name);
    if (*check_all) return cmd_check_all(cfg, s, paths);
    if (*eq || *join) return cmd_eq(cfg, s, input, rhs, bool(*join));

    auto terms = load_terms(cfg, s, input, code);
    if (code != kOk) return code;
    if (*typecheck) return cmd_typecheck(cfg, s, terms);
    if (*normalize) return cmd_normalize(cfg, s, terms, false);
    if (*trace) return cmd_normalize(cfg, s, terms, true);
    if (*denote) return cmd_denote(cfg, s, terms);
    return kError;
}
