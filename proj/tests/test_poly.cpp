#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diodef/poly.hpp"
#include "oracles.hpp"

using namespace diodef;

namespace {

QPoly rnd_poly(std::mt19937_64 &g, int deg, long bound) {
    QPoly p(deg + 1);
    for (auto &c : p) c = Rat(oracle::rnd_in(g, -bound, bound));
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

}  // namespace

TEST_CASE("division with remainder is exact") {
    std::mt19937_64 g(201);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly a = rnd_poly(g, oracle::rnd_in(g, 0, 6), 9);
        QPoly b = rnd_poly(g, oracle::rnd_in(g, 0, 4), 9);
        if (q_deg(b) < 0) continue;
        auto [q, r] = q_divrem(a, b);
        CHECK(q_deg(r) < q_deg(b));
        CHECK(q_add(q_mul(q, b), r) == a);
    }
}

TEST_CASE("gcd is monic and divides both arguments") {
    std::mt19937_64 g(202);
    for (int iter = 0; iter < 100; ++iter) {
        QPoly a = rnd_poly(g, oracle::rnd_in(g, 1, 5), 6);
        QPoly b = rnd_poly(g, oracle::rnd_in(g, 1, 5), 6);
        if (q_deg(a) < 0 || q_deg(b) < 0) continue;
        QPoly d = q_gcd(a, b);
        REQUIRE(q_deg(d) >= 0);
        CHECK(d.back() == Rat(1));
        CHECK(q_deg(q_divrem(a, d).second) < 0);
        CHECK(q_deg(q_divrem(b, d).second) < 0);
    }
    /* shared factor recovered exactly */
    QPoly f = {Rat(-2), Rat(0), Rat(1)};   /* x^2 - 2 */
    QPoly u = {Rat(1), Rat(1)}, v = {Rat(-3), Rat(1)};
    CHECK(q_gcd(q_mul(f, u), q_mul(f, v)) == f);
}

TEST_CASE("resultants and discriminants") {
    QPoly a = {Rat(-1), Rat(0), Rat(1)};  /* x^2 - 1 */
    QPoly b = {Rat(-1), Rat(1)};          /* x - 1, shares a root */
    CHECK(q_resultant(a, b) == Rat(0));
    CHECK(q_resultant(a, QPoly{Rat(-4), Rat(0), Rat(1)}) != Rat(0));

    CHECK(z_discriminant({1, 0, 1}) == Int(-4));    /* x^2 + 1 */
    CHECK(z_discriminant({-5, 0, 1}) == Int(20));   /* x^2 - 5 */
    CHECK(z_discriminant({-2, 0, 0, 1}) == Int(-108));
    CHECK(z_discriminant({1, -1, 0, 1}) != Int(0));
    /* repeated root <-> zero discriminant */
    CHECK(z_discriminant({1, 2, 1}) == Int(0));     /* (x+1)^2 */
}

TEST_CASE("Sturm chains count real roots in intervals") {
    SturmChain c2 = sturm_chain({Rat(-2), Rat(0), Rat(1)}); /* x^2 - 2 */
    CHECK(sturm_count_all(c2) == 2);
    CHECK(sturm_count(c2, Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(c2, Rat(-2), Rat(0)) == 1);
    CHECK(sturm_count(c2, Rat(2), Rat(9)) == 0);

    SturmChain c3 = sturm_chain({Rat(-2), Rat(0), Rat(0), Rat(1)}); /* x^3 - 2 */
    CHECK(sturm_count_all(c3) == 1);

    SturmChain c4 = sturm_chain({Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
    CHECK(sturm_count_all(c4) == 4);

    SturmChain c0 = sturm_chain({Rat(1), Rat(0), Rat(1)}); /* x^2 + 1 */
    CHECK(sturm_count_all(c0) == 0);
}

TEST_CASE("isolated real roots are disjoint, tight, and bracket sign changes") {
    ZPoly f = {1, 0, -10, 0, 1}; /* x^4 - 10x^2 + 1, roots near +-0.32, +-3.15 */
    Rat eps(1, 1024);
    auto iv = isolate_real_roots(f, eps);
    REQUIRE(iv.size() == 4);
    QPoly fq = q_poly(f);
    Rat bound = root_bound(f);
    for (size_t i = 0; i < iv.size(); ++i) {
        auto [lo, hi] = iv[i];
        CHECK(hi - lo <= eps);
        CHECK(lo >= -bound);
        CHECK(hi <= bound);
        /* squarefree: value changes sign over (lo, hi] or vanishes at hi */
        Rat a = q_eval(fq, lo), b = q_eval(fq, hi);
        CHECK((a * b < 0 || b == 0));
        if (i > 0) CHECK(iv[i - 1].second < lo);
    }
    CHECK(isolate_real_roots({1, 0, 1}, eps).empty());
}

TEST_CASE("Kronecker irreducibility on the catalogue shapes") {
    CHECK(z_irreducible({1, 0, 1}));
    CHECK(z_irreducible({-2, 0, 1}));
    CHECK(z_irreducible({-2, 0, 0, 1}));
    CHECK(z_irreducible({1, 1, 1, 1, 1}));
    CHECK(z_irreducible({9, 0, -2, 0, 1}));
    CHECK(z_irreducible({1, 0, -10, 0, 1}));

    CHECK_FALSE(z_irreducible({-1, 0, 1}));
    CHECK_FALSE(z_irreducible({0, 1, 1}));
    CHECK_FALSE(z_irreducible({4, 0, 0, 0, 1})); /* (x^2-2x+2)(x^2+2x+2) */

    for (ZPoly f : {ZPoly{-1, 0, 1}, ZPoly{4, 0, 0, 0, 1}, ZPoly{6, 5, 1}}) {
        auto gopt = z_monic_factor(f);
        REQUIRE(gopt.has_value());
        const ZPoly &fac = *gopt;
        CHECK(is_monic(fac));
        CHECK(z_deg(fac) >= 1);
        CHECK(z_deg(fac) <= z_deg(f) / 2);
        auto [q, r] = q_divrem(q_poly(f), q_poly(fac));
        CHECK(q_deg(r) < 0);
        (void)q;
    }
    CHECK_FALSE(z_monic_factor({1, 0, 1}).has_value());
}

TEST_CASE("evaluation and divisors") {
    CHECK(z_eval({1, 2, 3}, Int(2)) == Int(17));
    CHECK(q_eval({Rat(1, 2), Rat(0), Rat(1)}, Rat(1, 2)) == Rat(3, 4));
    CHECK(divisors_of(Int(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(Int(-12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(Int(1)) == std::vector<Int>{1});
}
