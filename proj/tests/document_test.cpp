#include <doctest.h>

#include "alc/document.hpp"

using namespace alc;

namespace {

const char* kDoc = R"(#mode strict
#let two = star + star
#expect-type T
#expect-normal 2*star
(\x:T. x) two;

#mode weak
#expect-normal 0*star
#expect-neq zero
0*star;

#use prelude
#expect-normal 8*star
!(Exp n3 [{2}*star]);
)";

}  // namespace

TEST_CASE("documents parse into items with settings") {
    Document d = parse_document(kDoc, "inline.alc");
    REQUIRE(d.items.size() == 3);
    CHECK(d.items[0].settings.mode == Mode::Strict);
    CHECK(d.items[1].settings.mode == Mode::Weak);
    CHECK(d.items[0].expects.size() == 2);
    CHECK(d.items[0].line == 5);
    CHECK(d.items[2].settings.prelude);
}

TEST_CASE("every expectation in a good document passes") {
    Document d = parse_document(kDoc, "inline.alc");
    auto outcomes = check_document(d);
    CHECK(outcomes.size() == 5);
    for (const auto& o : outcomes) CHECK_MESSAGE(o.ok, o.what << " " << o.detail);
}

TEST_CASE("a wrong expectation fails with a detail") {
    Document d = parse_document("#expect-normal 3*star\nstar + star;\n", "bad.alc");
    auto outcomes = check_document(d);
    REQUIRE(outcomes.size() == 1);
    CHECK_FALSE(outcomes[0].ok);
    CHECK(outcomes[0].detail.find("2*star") != std::string::npos);
}

TEST_CASE("bad directives report their line") {
    try {
        parse_document("star;\n#mode sideways\nstar;\n", "x.alc");
        FAIL("expected an error");
    } catch (const DocumentError& e) {
        CHECK(e.line() == 2);
    }
}
