#include <doctest.h>

#include "alc/parser.hpp"
#include "alc/scalar.hpp"

using namespace alc;

TEST_CASE("rationals reduce and order") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(Rat(1, 3) + Rat(1, 6) == a);
    CHECK(Rat(-1) < Rat(0));
    CHECK((Rat(3) / Rat(4)).str() == "3/4");
}

TEST_CASE("quadratic scalars form a field") {
    Scalar s2 = Scalar::sqrt2();
    Scalar i = Scalar::i();
    CHECK(s2 * s2 == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK((s2 * i) * (s2 * i) == Scalar(-2));

    Scalar x(Rat(1), Rat(2), Rat(-3), Rat(1, 2));
    CHECK(x * x.inverse() == Scalar::one());
    CHECK(x / x == Scalar::one());
    CHECK(conj(conj(x)) == x);
    CHECK((x - x).is_zero());
}

TEST_CASE("scalar syntax round trips") {
    for (const char* src : {"3", "-1/2", "sqrt2", "i", "1/2 + sqrt2", "1 + i*sqrt2"}) {
        Scalar s = parse_scalar(src);
        CHECK(parse_scalar(s.str()) == s);
    }
    CHECK(parse_scalar("1/sqrt2") * Scalar::sqrt2() == Scalar::one());
}

TEST_CASE("zero has no inverse") {
    CHECK_THROWS(Scalar::zero().inverse());
}
