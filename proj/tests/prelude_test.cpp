#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/prelude.hpp"
#include "alc/rewrite.hpp"
#include "alc/typing.hpp"
#include "support/oracle.hpp"

using namespace alc;

namespace {

Term nf(const Term& t) {
    RewriteOptions opts;
    Trace tr = normalize(t, opts, 20000);
    REQUIRE(tr.normal());
    return tr.result();
}

Term run_pow(const Term& n, const Scalar& alpha) {
    Term arg = Term::canon(Term::scal(alpha, Term::star()));
    return nf(Term::cocanon(Term::app(Term::app(pow_term(), n), arg)));
}

}  // namespace

TEST_CASE("typed prelude entries check") {
    for (const auto& e : prelude()) {
        if (!e.type) continue;
        CHECK_MESSAGE(has_type({}, e.term, *e.type), e.name);
    }
    CHECK(prelude_lookup("H") != nullptr);
    CHECK(prelude_lookup("nope") == nullptr);
}

TEST_CASE("qbit aliases parse") {
    Type q = parse_type("qbool", prelude_parse_options());
    CHECK(q == qbool_type());
}

TEST_CASE("hadamard twice is the identity") {
    // apply the qubit to two distinguishable branches and force
    auto run = [](const Term& q) {
        Term hh = Term::app(hadamard(), Term::app(hadamard(), q));
        Term probe = Term::app(Term::app(hh, parse_term("[star]")), parse_term("[2*star]"));
        return canonical(nf(Term::cocanon(probe)), Mode::Strict).str();
    };
    CHECK(run(ttq()) == "star");
    CHECK(run(ffq()) == "2*star");
}

TEST_CASE("exponentiation computes by rewriting") {
    CHECK(run_pow(parse_term("[n2 + {2}*n3]"), Scalar(2)).str() == "20*star");
}

TEST_CASE("polynomials agree with the oracle") {
    const std::vector<std::vector<std::pair<long long, unsigned>>> polys{
        {{3, 0}, {-2, 1}, {1, 3}}, {{1, 2}}, {{5, 1}, {-1, 2}, {2, 0}}};
    for (const auto& p : polys) {
        std::vector<std::pair<Scalar, unsigned>> sp;
        std::vector<std::pair<oracle::Q, unsigned>> qp;
        for (auto [b, n] : p) {
            sp.emplace_back(Scalar(b), n);
            qp.emplace_back(b, n);
        }
        CHECK(infer({}, polynomial(sp)) == Type::monad(Type::integer()));
        for (long long a : {-1, 2, 3}) {
            oracle::Q want = oracle::poly_eval(qp, a);
            Term got = run_pow(polynomial(sp), Scalar(a));
            std::string expect = want == 0 ? "zero" : want == 1 ? "star" : (want < 0 ? "{" + want.str() + "}" : want.str()) + "*star";
            CHECK_MESSAGE(canonical(got, Mode::Strict).str() == expect, got.str());
        }
    }
}

TEST_CASE("the broken demo splits in strict mode") {
    BrokenDemo d = broken_demo(Term::var("b"), Type::base("iota"), Mode::Strict, 500);
    CHECK(d.expected());
    CHECK(d.branch_a.has_value());
    CHECK(d.branch_b.has_value());
    CHECK_FALSE(d.join.joined);
}

TEST_CASE("encodings reject pairs") {
    CHECK_THROWS_AS(enc_alg(parse_term("<star, star>")), UnsupportedConstruct);
    CHECK_NOTHROW(enc_lin(parse_term("\\x:iota. x")));
}
