#pragma once

#include "alc/parser.hpp"
#include "alc/rewrite.hpp"
#include "alc/semantics.hpp"
#include "alc/typing.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace alc {

// Settings in force for an item; directives update them for the rest of
// the file.
struct Settings {
    Mode mode = Mode::Weak;
    Model model = Model::Strong;
    Congruence congruence = Congruence::CallByValue;
    std::size_t fuel = 10000;
    Context ctx;
    bool prelude = false;
    // Query points for weak-model denotations.
    std::vector<SemValue> at;
    // #let bindings, substituted into later terms.
    std::vector<std::pair<std::string, Term>> lets;
};

enum class ExpectKind { Type, Normal, Fuel, Equal, NotEqual, Denote, Error };

const char* expect_name(ExpectKind k);

struct Expectation {
    ExpectKind kind;
    std::string arg;
    std::size_t line = 0;
    // Resolved argument of expect-normal, expect-eq and expect-neq.
    Term term = Term::star();
};

struct Item {
    // After #let and prelude substitution.
    Term term = Term::star();
    std::string source;
    std::size_t line = 0;
    Settings settings;
    std::vector<Expectation> expects;
};

struct Document {
    std::string path;
    std::vector<Item> items;
};

class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string path, std::size_t line, const std::string& message);
    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

// Items are terms separated by ';'. Lines starting with '#' are directives:
//   #use prelude | #mode strict|weak | #model strong|weak | #fuel N
//   #congruence cbv|full | #ctx x : A, y : B | #let name = term | #at 0,1,*
//   #expect-type A | #expect-normal t | #expect-fuel | #expect-eq t
//   #expect-neq t | #expect-denote text | #expect-error
// Expectations apply to the next item. '--' starts a comment.
Document parse_document(std::string_view text, std::string path = "<input>", Settings base = {});
Document load_document(const std::filesystem::path& file, Settings base = {});

ParseOptions parse_options(const Settings& s);
// Parse src and substitute the let bindings and, if enabled, the prelude.
Term read_term(std::string_view src, const Settings& s);
// Parse "0,1,*"; throws std::invalid_argument on a bad point.
std::vector<SemValue> parse_points(const std::string& list);
RewriteOptions rewrite_options(const Settings& s);
SemOptions sem_options(const Settings& s);

// Denotation text as printed by the tools: the element, or its values at the
// query points when some are given.
std::string denotation_text(const Denotation& d, const std::vector<SemValue>& at);

struct CheckOutcome {
    std::size_t line = 0;
    std::string what;
    bool ok = false;
    std::string detail;
};

// Every expectation is tested; an item without any must typecheck.
std::vector<CheckOutcome> check_item(const Item& item);
std::vector<CheckOutcome> check_document(const Document& doc);

}  // namespace alc
