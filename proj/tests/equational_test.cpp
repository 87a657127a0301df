#include <doctest.h>

#include "alc/equational.hpp"
#include "alc/parser.hpp"

using namespace alc;

namespace {

Verdict eq(const char* a, const char* b, const char* type, Mode mode, const Context& ctx = {}) {
    return ax_equiv(ctx, parse_term(a), parse_term(b), parse_type(type), mode).verdict;
}

}  // namespace

TEST_CASE("equal closed terms") {
    CHECK(eq("star + star", "2*star", "T", Mode::Weak) == Verdict::Equal);
    CHECK(eq("(\\x. x) (star + star)", "2*star", "T", Mode::Strict) == Verdict::Equal);
    CHECK(eq("\\x:T. (\\y. y) x", "\\x:T. x", "T -> T", Mode::Weak) == Verdict::Equal);
}

TEST_CASE("zero scalars separate the modes") {
    CHECK(eq("0*star", "zero", "T", Mode::Strict) == Verdict::Equal);
    CHECK(eq("0*star", "zero", "T", Mode::Weak) == Verdict::NotEqual);
}

TEST_CASE("distinct values differ") {
    CHECK(eq("tt", "ff", "bit", Mode::Weak) == Verdict::NotEqual);
    CHECK(eq("2*star", "3*star", "T", Mode::Strict) == Verdict::NotEqual);
}

TEST_CASE("open terms under a context") {
    Context ctx{{"x", parse_type("M iota")}};
    CHECK(eq("[!x]", "x", "M iota", Mode::Weak, ctx) == Verdict::Equal);
}

TEST_CASE("the verdict carries both traces") {
    auto v = ax_equiv({}, parse_term("(\\x. x) star"), parse_term("star"), Type::top(), Mode::Weak);
    CHECK(v.verdict == Verdict::Equal);
    CHECK(v.left.steps.size() == 1);
    CHECK(v.right.steps.empty());
    CHECK(std::string(verdict_name(Verdict::Unknown)) == "Unknown");
}
