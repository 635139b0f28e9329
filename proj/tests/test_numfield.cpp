#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diodef/errors.hpp"
#include "diodef/numfield.hpp"
#include "oracles.hpp"

using namespace diodef;

TEST_CASE("catalogue fields come with their known discriminants") {
    const std::vector<std::pair<const char *, long>> expected = {
        {"rat", 1},         {"gauss", -4},       {"sqrt2", 8},
        {"sqrt3", 12},      {"sqrt5", 5},        {"cbrt2", -108},
        {"cbrt3", -243},    {"zeta5", 125},      {"gauss_sqrt2", 256},
        {"sqrt2_sqrt3", 2304},
    };
    auto names = catalogue_field_names();
    CHECK(names.size() == expected.size());
    for (const auto &[name, disc] : expected) {
        FieldPtr K = field_by_name(name);
        CHECK(K->name == name);
        CHECK(K->disc == Int(disc));
        CHECK(K->degree == (size_t)z_deg(K->poly));
        CHECK(is_monic(K->poly));
        /* first basis vector is 1 */
        REQUIRE(!K->basis.empty());
        CHECK(K->basis[0][0] == Rat(1));
        for (size_t j = 1; j < K->degree; ++j) CHECK(K->basis[0][j] == Rat(0));
    }
    CHECK_THROWS_AS(field_by_name("no_such_field"), domain_error);
}

TEST_CASE("ring axioms hold on random elements") {
    std::mt19937_64 g(301);
    for (const char *name : {"gauss", "sqrt5", "cbrt2", "zeta5", "sqrt2_sqrt3"}) {
        FieldPtr K = field_by_name(name);
        for (int iter = 0; iter < 40; ++iter) {
            Element a = oracle::rnd_element(g, K, 9);
            Element b = oracle::rnd_element(g, K, 9);
            Element c = oracle::rnd_element(g, K, 9);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == K->zero());
            CHECK(a * K->one() == a);
            if (!b.is_zero()) {
                CHECK(b * inverse(b) == K->one());
                CHECK((a / b) * b == a);
            }
        }
    }
}

TEST_CASE("norm and trace are multiplicative and additive") {
    std::mt19937_64 g(302);
    for (const char *name : {"gauss", "sqrt5", "cbrt2", "zeta5"}) {
        FieldPtr K = field_by_name(name);
        for (int iter = 0; iter < 30; ++iter) {
            Element a = oracle::rnd_element(g, K, 9);
            Element b = oracle::rnd_element(g, K, 9);
            CHECK(norm(a * b) == norm(a) * norm(b));
            CHECK(trace(a + b) == trace(a) + trace(b));
        }
        Element five = K->from_rat(5);
        CHECK(trace(five) == Rat(5) * Rat((long)K->degree));
        Rat n5 = norm(five);
        Rat expect(1);
        for (size_t i = 0; i < K->degree; ++i) expect *= 5;
        CHECK(n5 == expect);
    }
    FieldPtr gauss = field_by_name("gauss");
    CHECK(trace(gauss->theta()) == Rat(0));
    CHECK(norm(gauss->theta()) == Rat(1));
    FieldPtr s5 = field_by_name("sqrt5");
    CHECK(norm(s5->theta()) == Rat(-5));
}

TEST_CASE("minimal polynomials") {
    FieldPtr K = field_by_name("gauss");
    CHECK(min_poly(K->theta()) == q_poly(K->poly));
    CHECK(min_poly(K->from_rat(Rat(3, 2))) == QPoly{Rat(-3, 2), Rat(1)});
    /* 1 + i has min poly x^2 - 2x + 2 */
    Element a = K->one() + K->theta();
    CHECK(min_poly(a) == QPoly{Rat(2), Rat(-2), Rat(1)});
    FieldPtr F = field_by_name("gauss_sqrt2");
    /* a primitive element: its min poly must be the defining one */
    CHECK(min_poly(F->theta()) == q_poly(F->poly));
}

TEST_CASE("integral coordinates match the naive basis solve") {
    std::mt19937_64 g(303);
    for (const char *name : {"gauss", "sqrt5", "cbrt2", "zeta5", "gauss_sqrt2"}) {
        FieldPtr K = field_by_name(name);
        for (int iter = 0; iter < 50; ++iter) {
            /* integral by construction */
            IVec ic(K->degree);
            for (auto &x : ic) x = oracle::rnd_in(g, -9, 9);
            QVec icq;
            for (const Int &x : ic) icq.emplace_back(x);
            Element a = K->from_integral(icq);
            CHECK(is_integral(a));
            CHECK(integral_coords(a) == icq);
            /* against the oracle's independent basis multiply/solve */
            CHECK(a.pow == oracle::integral_to_pow(K, ic));
            auto back = oracle::pow_to_integral(K, a.pow);
            REQUIRE(back.has_value());
            CHECK(*back == ic);
        }
    }
    FieldPtr s5 = field_by_name("sqrt5");
    /* sqrt5 = -1 * 1 + 2 * (1+sqrt5)/2 */
    CHECK(integral_coords(s5->theta()) == QVec{Rat(-1), Rat(2)});
    CHECK(is_integral(s5->from_integral(QVec{Rat(0), Rat(1)})));
    FieldPtr gauss = field_by_name("gauss");
    CHECK_FALSE(is_integral(Rat(1, 2) * gauss->theta()));
}

TEST_CASE("multiplication matrices realize multiplication") {
    std::mt19937_64 g(304);
    FieldPtr K = field_by_name("zeta5");
    for (int iter = 0; iter < 20; ++iter) {
        Element a = oracle::rnd_element(g, K, 5);
        Element b = oracle::rnd_element(g, K, 5);
        QMat m = mult_matrix(a);
        QVec prod(K->degree, Rat(0));
        for (size_t i = 0; i < K->degree; ++i)
            for (size_t j = 0; j < K->degree; ++j) prod[j] += b.pow[i] * m[i][j];
        CHECK(prod == (a * b).pow);
    }
}

TEST_CASE("pow_int and inverse") {
    FieldPtr K = field_by_name("sqrt2");
    Element t = K->theta();
    CHECK(pow_int(t, Int(10)) == K->from_rat(32));
    CHECK(pow_int(t, Int(0)) == K->one());
    CHECK(pow_int(t, Int(-2)) == K->from_rat(Rat(1, 2)));
    CHECK_THROWS_AS(inverse(K->zero()), domain_error);
    CHECK_THROWS_AS(K->one() / K->zero(), domain_error);
}

TEST_CASE("make_field verifies its inputs") {
    CHECK_THROWS_AS(make_field({-1, 0, 1}), domain_error);          /* reducible */
    CHECK_THROWS_AS(make_field({0, 1, 1}), domain_error);           /* reducible */
    CHECK_THROWS_AS(make_field({2, 0, 2}), domain_error);           /* not monic */
    /* a supplied basis that is not multiplicatively closed */
    QMat bad = {{Rat(1), Rat(0)}, {Rat(0), Rat(1, 3)}};
    CHECK_THROWS_AS(make_field({1, 0, 1}, bad), domain_error);
    /* correct supplied basis is accepted and matches the builtin */
    QMat ok = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    FieldPtr K = make_field({1, 0, 1}, ok, "gauss_again");
    CHECK(same_field(K, field_by_name("gauss")));
}

TEST_CASE("same_field is structural") {
    FieldPtr a = field_by_name("gauss");
    FieldPtr b = make_field({1, 0, 1});
    CHECK(same_field(a, b));
    CHECK_FALSE(same_field(a, field_by_name("sqrt2")));
    Element x = a->one(), y = b->one();
    CHECK_NOTHROW(require_same_field(x, y));
    CHECK_THROWS_AS(require_same_field(x, field_by_name("sqrt2")->one()), domain_error);
}
