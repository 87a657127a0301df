#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/semantics.hpp"
#include "support/gen.hpp"

using namespace alc;

namespace {

SemValue num(std::uint64_t n) { return SemValue::integer(n); }

ModuleElement spread(Model m, std::uint64_t n) {
    ModuleElement e = ModuleElement::zero(m);
    e.add_at(num(n), Scalar(2));
    e.add_at(num(n + 1), Scalar(-1));
    return e;
}

std::string denote(const char* src, Model model = Model::Strong) {
    SemOptions opts;
    opts.model = model;
    return denote_computation({}, parse_term(src), opts).str();
}

}  // namespace

TEST_CASE("monad laws") {
    for (Model m : {Model::Strong, Model::Weak}) {
        auto f = [m](const SemValue& v) { return spread(m, v.as_int()); };
        auto g = [m](const SemValue& v) { return spread(m, v.as_int() * 3); };
        auto unit = [m](const SemValue& v) { return ModuleElement::unit(m, v); };
        ModuleElement x = spread(m, 4) + ModuleElement::unit(m, num(0)).scaled(Scalar(5));

        CHECK(ModuleElement::unit(m, num(7)).bind(f) == f(num(7)));
        CHECK(x.bind(unit) == x);
        CHECK(x.bind(f).bind(g) == x.bind([&](const SemValue& v) { return f(v).bind(g); }));
    }
}

TEST_CASE("bottom absorbs") {
    auto f = [](const SemValue& v) { return ModuleElement::unit(Model::Strong, v); };
    CHECK(ModuleElement::bottom().bind(f).is_bottom());
    CHECK((ModuleElement::bottom() + ModuleElement::zero(Model::Strong)).is_bottom());
}

TEST_CASE("omega coefficients") {
    Coef w = Coef::omega();
    CHECK((w + Coef(Scalar(3))).is_omega());
    CHECK((w * Coef(Scalar(2))).is_omega());
    CHECK((Coef(Scalar(2)) * Coef(Scalar(3))) == Coef(Scalar(6)));
}

TEST_CASE("strong fixpoint of the identity is bottom") {
    auto id = [](const ModuleElement& e) { return e; };
    CHECK(fix_strong(id, 64).is_bottom());
    CHECK(denote("!(Y (\\x:M T. x))") == "⊥");
}

TEST_CASE("weak fixpoint of the identity is zero") {
    auto id = [](const ModuleElement& e) { return e; };
    CHECK(fix_weak(id, 64).at(num(0)).is_zero());
    CHECK(denote("!(Y (\\x:M T. x))", Model::Weak) == "0");
}

TEST_CASE("a growing fixpoint goes to omega in the weak model") {
    auto grow = [](const ModuleElement& e) { return e + ModuleElement::unit(Model::Weak, num(0)); };
    bool approx = false;
    ModuleElement r = fix_weak(grow, 16, &approx);
    CHECK(r.at(num(0)).is_omega());
    CHECK(r.at(num(1)).is_zero());
}

TEST_CASE("denotations of small computations") {
    CHECK(denote("star + 2*star") == "{* -> 3}");
    CHECK(denote("if tt then star else zero") == "{* -> 1}");
    CHECK(denote("pred n0") == "{0 -> 1}");
}

TEST_CASE("the strength map pairs its argument") {
    ModuleElement m = spread(Model::Strong, 1);
    ModuleElement s = strength(SemValue::unit(), m);
    CHECK(s.at(SemValue::pair(SemValue::unit(), num(1))) == Coef(Scalar(2)));
    CHECK(s.at(SemValue::pair(SemValue::unit(), num(2))) == Coef(Scalar(-1)));
}

TEST_CASE("rewriting preserves denotations") {
    testgen::GenOptions go;
    go.observable = true;
    testgen::TermGen gen(21, go);
    SemOptions opts;
    for (int n = 0; n < 150; ++n) {
        auto rep = soundness_check(gen.closed().first, {}, opts, 200);
        CHECK_MESSAGE(rep.ok(), (rep.details.empty() ? "" : rep.details.front()));
    }
}

TEST_CASE("query points") {
    CHECK(parse_point("3") == num(3));
    CHECK(parse_point("*") == SemValue::unit());
    CHECK(parse_point("tt") == SemValue::boolean(true));
    CHECK_FALSE(parse_point("banana").has_value());
}
