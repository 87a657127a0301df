#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/rewrite.hpp"
#include "support/gen.hpp"

using namespace alc;

namespace {

std::string nf(const char* src, Mode mode = Mode::Weak) {
    RewriteOptions opts;
    opts.mode = mode;
    Trace tr = normalize(parse_term(src), opts, 1000);
    REQUIRE(tr.normal());
    return tr.result().str();
}

}  // namespace

TEST_CASE("rule names round trip") {
    for (int r = int(RuleId::EF); r <= int(RuleId::BifFF); ++r) {
        auto id = RuleId(r);
        CHECK(rule_from_name(rule_name(id)) == id);
    }
    CHECK(is_linearity_rule(RuleId::A5));
    CHECK_FALSE(is_linearity_rule(RuleId::B1));
    CHECK(is_beta_rule(RuleId::BY));
}

TEST_CASE("beta and linearity") {
    CHECK(nf("(\\x. x) (star + 2*star)") == "3*star");
    CHECK(nf("fst <tt, ff>") == "tt");
    CHECK(nf("iszero (pred (succ n0))") == "tt");
    CHECK(nf("if iszero (succ n0) then star else 2*star") == "2*star");
    CHECK(nf("!([star] + [star])") == "2*star");
}

TEST_CASE("the zero-scalar rule is strict only") {
    CHECK(nf("(\\x. 0*x) star", Mode::Strict) == "zero");
    CHECK(nf("(\\x. 0*x) star", Mode::Weak) == "0*star");
}

TEST_CASE("trace records each step") {
    Trace tr = normalize(parse_term("(\\x. x) (star + star)"), {}, 100);
    REQUIRE(tr.steps.size() == 3);
    CHECK(tr.steps[0].rule == RuleId::EF);
    CHECK(tr.steps[1].rule == RuleId::A5);
    CHECK(tr.steps[2].rule == RuleId::B1);
    CHECK(position_str(tr.steps[2].pos) == "0");
}

TEST_CASE("fuel runs out on a divergent term") {
    Trace tr = normalize(parse_term("!(Y (\\x:M T. x))"), {}, 40);
    CHECK(tr.status == TraceStatus::FuelExhausted);
    CHECK(tr.steps.size() == 40);
}

TEST_CASE("join finds a common reduct") {
    RewriteOptions opts;
    auto r = join(parse_term("(\\x. x) (2*star)"), parse_term("star + star"), opts, 200);
    CHECK(r.joined);
    REQUIRE(r.common.has_value());
    CHECK(r.common->str() == "2*star");
}

TEST_CASE("normal forms have no reducts") {
    testgen::TermGen gen(3, {});
    RewriteOptions opts;
    for (int n = 0; n < 200; ++n) {
        Trace tr = normalize(gen.closed().first, opts, 2000);
        if (tr.normal()) CHECK_MESSAGE(!step(tr.result(), opts), tr.result().str());
    }
}
