#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/term.hpp"
#include "support/gen.hpp"

using namespace alc;

TEST_CASE("printing then parsing gives back the term") {
    testgen::TermGen gen(11, {});
    for (int n = 0; n < 300; ++n) {
        Term t = gen.closed().first;
        Term back = parse_term(t.str());
        CHECK_MESSAGE(alpha_equal(t, back), t.str());
    }
}

TEST_CASE("alpha equivalence ignores binder names") {
    CHECK(alpha_equal(parse_term("\\x. \\y. x y"), parse_term("\\a. \\b. a b")));
    CHECK_FALSE(alpha_equal(parse_term("\\x. \\y. x"), parse_term("\\x. \\y. y")));
    CHECK_FALSE(alpha_equal(parse_term("\\x. z"), parse_term("\\x. w")));
}

TEST_CASE("substitution avoids capture") {
    Term t = parse_term("\\y. x y");
    Term r = substitute(t, "x", Term::var("y"));
    CHECK(free_vars(r) == std::set<std::string>{"y"});
    CHECK(alpha_equal(r, parse_term("\\z. y z")));
}

TEST_CASE("values") {
    CHECK(is_value(parse_term("\\x. x")));
    CHECK(is_value(parse_term("<star, tt>")));
    CHECK(is_value(parse_term("succ (succ n0)")));
    CHECK_FALSE(is_value(parse_term("star + star")));
    CHECK_FALSE(is_value(parse_term("(\\x. x) star")));
    CHECK_FALSE(is_value(parse_term("fst <star, star>")));
    CHECK(is_value_combination(parse_term("tt + 2*ff")));
}

TEST_CASE("canonical sums") {
    Term t = parse_term("star + (2*star + tt) + 0*ff");
    CHECK(canonical(t, Mode::Strict).str() == canonical(parse_term("3*star + tt"), Mode::Strict).str());
    CHECK(canonical(t, Mode::Weak).str() == canonical(parse_term("3*star + tt + 0*ff"), Mode::Weak).str());
    Term c = canonical(t, Mode::Weak);
    CHECK(alpha_equal(canonical(c, Mode::Weak), c));
    CHECK(ac_equal(parse_term("a + (b + c)"), parse_term("c + b + a")));
    CHECK_FALSE(ac_equal(parse_term("a + a"), parse_term("2*a")));
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_term("\\x. (x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() >= 6);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_type("T ->"), ParseError);
}

TEST_CASE("types") {
    Type t = parse_type("M (iota -> T) * bit");
    CHECK(parse_type(t.str()) == t);
    CHECK(parse_type("iota -> iota -> T") == Type::arrow(Type::base("iota"), Type::arrow(Type::base("iota"), Type::top())));
}
