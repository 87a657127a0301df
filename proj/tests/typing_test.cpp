#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/rewrite.hpp"
#include "alc/typing.hpp"
#include "support/gen.hpp"

using namespace alc;

namespace {

Type ty(const char* s) { return parse_type(s); }
Type infer_closed(const char* s) { return infer({}, parse_term(s)); }

}  // namespace

TEST_CASE("inference on small terms") {
    CHECK(infer_closed("\\x:T. [x]") == ty("T -> M T"));
    CHECK(infer_closed("[star] + 2*[star]") == ty("M T"));
    CHECK(infer_closed("fst <tt, star>") == ty("bit"));
    CHECK(infer_closed("succ (succ n0)") == ty("int"));
    CHECK(infer({{"x", ty("M T")}}, parse_term("!x")) == ty("T"));
}

TEST_CASE("ill-typed terms are rejected") {
    CHECK_THROWS_AS(infer_closed("star star"), TypeError);
    CHECK_THROWS_AS(infer_closed("if star then tt else ff"), TypeError);
    CHECK_THROWS_AS(infer_closed("tt + star"), TypeError);
    CHECK_FALSE(try_infer({}, parse_term("y")).has_value());
}

TEST_CASE("reduction preserves types") {
    testgen::TermGen gen(5, {});
    RewriteOptions opts;
    int checked = 0;
    for (int n = 0; n < 200; ++n) {
        auto [term, type] = gen.closed();
        Trace tr = normalize(term, opts, 50);
        Judgment j{{}, term, type};
        for (const auto& s : tr.steps) {
            CHECK_MESSAGE(check_subject_reduction(j, s.term), s.term.str());
            ++checked;
        }
    }
    CHECK(checked > 0);
}
