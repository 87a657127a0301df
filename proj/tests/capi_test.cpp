#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alc/alc.h"

#include <cstring>
#include <string>

namespace {

// Owns a library string.
std::string take(char* s) {
    std::string r = s ? s : "";
    alc_string_free(s);
    return r;
}

struct Session {
    alc_session* s = nullptr;
    Session() { REQUIRE(alc_session_new(&s) == ALC_OK); }
    ~Session() { alc_session_free(s); }
    alc_term* parse(const char* src) {
        alc_term* t = nullptr;
        REQUIRE(alc_parse(s, src, &t) == ALC_OK);
        return t;
    }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(alc_version()) > 0);
    CHECK(std::string(alc_status_name(ALC_NOT_EQUAL)) == "not-equal");
}

TEST_CASE("parse, typecheck and normalize") {
    Session ss;
    alc_term* t = ss.parse("(\\x:T. x) (star + star)");
    char* ty = nullptr;
    CHECK(alc_typecheck(ss.s, t, &ty) == ALC_OK);
    CHECK(take(ty) == "T");

    char* res = nullptr;
    char* tr = nullptr;
    size_t steps = 0;
    CHECK(alc_normalize(ss.s, t, &res, &tr, &steps) == ALC_OK);
    CHECK(take(res) == "2*star");
    CHECK(steps == 3);
    CHECK(take(tr).find("B1") != std::string::npos);
    alc_term_free(t);
}

TEST_CASE("parse errors keep a position") {
    Session ss;
    alc_term* t = nullptr;
    CHECK(alc_parse(ss.s, "\\x. (x", &t) == ALC_ERR_PARSE);
    CHECK(t == nullptr);
    CHECK(alc_last_line(ss.s) == 1);
    CHECK(alc_last_column(ss.s) > 0);
    CHECK(std::strlen(alc_last_error(ss.s)) > 0);
}

TEST_CASE("type errors") {
    Session ss;
    alc_term* t = ss.parse("star star");
    char* ty = nullptr;
    CHECK(alc_typecheck(ss.s, t, &ty) == ALC_ERR_TYPE);
    alc_term_free(t);
}

TEST_CASE("fuel exhaustion") {
    Session ss;
    REQUIRE(alc_session_set_fuel(ss.s, 30) == ALC_OK);
    alc_term* t = ss.parse("!(Y (\\x:M T. x))");
    CHECK(alc_term_has_fix(t));
    char* res = nullptr;
    size_t steps = 0;
    CHECK(alc_normalize(ss.s, t, &res, nullptr, &steps) == ALC_ERR_FUEL);
    CHECK(steps == 30);
    alc_string_free(res);
    alc_term_free(t);
}

TEST_CASE("equivalence depends on the mode") {
    Session ss;
    alc_term* a = ss.parse("0*star");
    alc_term* b = ss.parse("zero");
    char* d = nullptr;
    CHECK(alc_equiv(ss.s, a, b, &d) == ALC_NOT_EQUAL);
    alc_string_free(d);
    alc_term_free(a);
    alc_term_free(b);

    REQUIRE(alc_session_set_mode(ss.s, ALC_MODE_STRICT) == ALC_OK);
    a = ss.parse("0*star");
    b = ss.parse("zero");
    CHECK(alc_term_is_strict(a));
    CHECK(alc_equiv(ss.s, a, b, &d) == ALC_OK);
    alc_string_free(d);
    alc_term_free(a);
    alc_term_free(b);
}

TEST_CASE("denotations and query points") {
    Session ss;
    alc_term* t = ss.parse("star + 2*star");
    char* out = nullptr;
    int approx = -1;
    CHECK(alc_denote(ss.s, t, &out, &approx) == ALC_OK);
    CHECK(take(out) == "{* -> 3}");
    CHECK(approx == 0);
    alc_term_free(t);
    CHECK(alc_session_set_points(ss.s, "0,x") == ALC_ERR_ARGUMENT);
}

TEST_CASE("context, lets and prelude") {
    Session ss;
    REQUIRE(alc_session_declare(ss.s, "y", "M iota") == ALC_OK);
    REQUIRE(alc_session_let(ss.s, "two", "star + star") == ALC_OK);
    alc_term* t = ss.parse("<[!y], two>");
    char* ty = nullptr;
    CHECK(alc_typecheck(ss.s, t, &ty) == ALC_OK);
    CHECK(take(ty) == "M iota * T");
    alc_term_free(t);

    alc_term* h = nullptr;
    CHECK(alc_parse(ss.s, "H ttq", &h) == ALC_OK);
    alc_term_free(h);
    REQUIRE(alc_session_use_prelude(ss.s, 1) == ALC_OK);
    h = ss.parse("H ttq");
    CHECK(alc_typecheck(ss.s, h, &ty) == ALC_OK);
    alc_string_free(ty);
    alc_term_free(h);
}

TEST_CASE("the broken demo in strict mode") {
    Session ss;
    REQUIRE(alc_session_set_mode(ss.s, ALC_MODE_STRICT) == ALC_OK);
    char* out = nullptr;
    CHECK(alc_demo(ss.s, "broken", &out) == ALC_NOT_JOINED);
    CHECK(take(out).find("do not join") != std::string::npos);
    CHECK(alc_demo(ss.s, "nonsense", &out) == ALC_ERR_ARGUMENT);
}

TEST_CASE("documents through the C interface") {
    Session ss;
    alc_document* d = nullptr;
    const char* text = "#expect-normal 2*star\nstar + star;\n#expect-normal star\nstar + star;\n";
    REQUIRE(alc_document_parse(ss.s, text, "t.alc", &d) == ALC_OK);
    CHECK(alc_document_size(d) == 2);
    alc_term* item = nullptr;
    REQUIRE(alc_document_item(ss.s, d, 1, &item) == ALC_OK);
    CHECK(alc_term_line(item) == 4);
    alc_term_free(item);
    char* report = nullptr;
    size_t failures = 0;
    CHECK(alc_document_check(ss.s, d, &report, &failures) == ALC_CHECK_FAILED);
    CHECK(failures == 1);
    CHECK(take(report).find("FAIL\tt.alc:3") != std::string::npos);
    alc_document_free(d);
}

TEST_CASE("null handles are rejected") {
    CHECK(alc_session_set_fuel(nullptr, 3) == ALC_ERR_ARGUMENT);
    CHECK(alc_parse(nullptr, "star", nullptr) == ALC_ERR_ARGUMENT);
}
