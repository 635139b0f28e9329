#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diodef/numfield.hpp"
#include "diodef/roots.hpp"

using namespace diodef;

namespace {

/* squared distance between disk centers */
Rat center_dist2(const RootBox &a, const RootBox &b) {
    return qc_abs2(qc_sub(a.center, b.center));
}

}  // namespace

TEST_CASE("signatures of the catalogue fields") {
    const std::vector<std::tuple<const char *, int, int>> expected = {
        {"rat", 1, 0},        {"gauss", 0, 1},       {"sqrt2", 2, 0},
        {"sqrt3", 2, 0},      {"sqrt5", 2, 0},       {"cbrt2", 1, 1},
        {"cbrt3", 1, 1},      {"zeta5", 0, 2},       {"gauss_sqrt2", 0, 2},
        {"sqrt2_sqrt3", 4, 0},
    };
    for (const auto &[name, r1, r2] : expected) {
        FieldPtr K = field_by_name(name);
        RootSet rs = isolate_roots(K->poly);
        CHECK(rs.r1 == r1);
        CHECK(rs.r2 == r2);
        CHECK(rs.roots.size() == K->degree);
        CHECK(rs.r1 + 2 * rs.r2 == (int)K->degree);
    }
}

TEST_CASE("isolating disks are small, disjoint, and conjugate-paired") {
    for (const char *name : {"cbrt2", "zeta5", "gauss_sqrt2", "sqrt2_sqrt3"}) {
        FieldPtr K = field_by_name(name);
        RootSet rs = isolate_roots(K->poly, 64);
        size_t n = rs.roots.size();
        REQUIRE(rs.conj.size() == n);
        Rat bound(1, Int(1) << 60);  /* radius < 2^-60 is comfortably under 2^-64 + slack */
        for (size_t i = 0; i < n; ++i) {
            CHECK(rs.roots[i].radius > Rat(0));
            CHECK(rs.roots[i].radius < bound);
            if (rs.roots[i].real) CHECK(rs.roots[i].center.im == Rat(0));
            /* conjugation is an involution matching centers */
            size_t j = rs.conj[i];
            CHECK(rs.conj[j] == i);
            CHECK(rs.roots[j].center.re == rs.roots[i].center.re);
            CHECK(rs.roots[j].center.im == -rs.roots[i].center.im);
            CHECK((i == j) == rs.roots[i].real);
        }
        /* pairwise disjoint: |c_i - c_j| > r_i + r_j, checked via squares */
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Rat s = rs.roots[i].radius + rs.roots[j].radius;
                CHECK(center_dist2(rs.roots[i], rs.roots[j]) > s * s);
            }
        /* canonical order */
        for (size_t i = 0; i + 1 < n; ++i) {
            const QC &a = rs.roots[i].center, &b = rs.roots[i + 1].center;
            CHECK((a.re < b.re || (a.re == b.re && a.im < b.im)));
        }
    }
}

TEST_CASE("each disk actually contains its root") {
    /* x^2 - 2: the real disks must straddle +-sqrt(2), i.e. center^2 - 2
     * changes sign across the disk along the real axis */
    RootSet rs = isolate_roots({-2, 0, 1});
    REQUIRE(rs.roots.size() == 2);
    for (const RootBox &b : rs.roots) {
        REQUIRE(b.real);
        Rat lo = b.center.re - b.radius, hi = b.center.re + b.radius;
        CHECK(lo * lo - 2 < Rat(0) * (hi * hi - 2));  /* opposite signs */
        CHECK((lo * lo - 2 < 0));
        CHECK((hi * hi - 2 > 0));
    }
    /* x^2 + 1: purely imaginary pair */
    RootSet gi = isolate_roots({1, 0, 1});
    REQUIRE(gi.roots.size() == 2);
    for (const RootBox &b : gi.roots) {
        CHECK_FALSE(b.real);
        CHECK(b.center.re == Rat(0));
        Rat d = b.center.im < 0 ? -b.center.im : b.center.im;
        Rat gap = d - 1 < 0 ? 1 - d : d - 1;
        CHECK(gap <= b.radius);  /* distance from center to i is within the disk */
    }
}

TEST_CASE("eval_at_root encloses the true value") {
    FieldPtr K = field_by_name("sqrt2");
    RootSet rs = isolate_roots(K->poly);
    /* g = x^2 - 2 vanishes at both roots: |value| <= err */
    QPoly g = q_poly(K->poly);
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        QCInterval v = eval_at_root(rs, g, i);
        CHECK(qc_abs2(v.value) <= v.err * v.err);
    }
    /* g = x + 3 at sqrt(2): enclosure must contain a point whose square is
     * (x+3)^2 = x^2 + 6x + 9 = 11 + 6x, i.e. 11 + 6 sqrt 2.  Sanity: the
     * center value is within err of the exact value, so (center - exact)
     * cannot exceed err.  We verify via the resultant-free route: the
     * interval around the positive root is positive and near 4.414. */
    size_t pos = rs.roots[0].center.re > 0 ? 0 : 1;
    QCInterval w = eval_at_root(rs, {Rat(3), Rat(1)}, pos);
    CHECK(w.value.im == Rat(0));
    CHECK(w.value.re - w.err > Rat(4));
    CHECK(w.value.re + w.err < Rat(5));
}

TEST_CASE("root isolation is deterministic") {
    RootSet a = isolate_roots({-2, 0, 0, 1}, 80);
    RootSet b = isolate_roots({-2, 0, 0, 1}, 80);
    REQUIRE(a.roots.size() == b.roots.size());
    for (size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].center.re == b.roots[i].center.re);
        CHECK(a.roots[i].center.im == b.roots[i].center.im);
        CHECK(a.roots[i].radius == b.roots[i].radius);
    }
    CHECK(a.precision_bits == b.precision_bits);
}

TEST_CASE("requested precision tightens the disks") {
    RootSet coarse = isolate_roots({-2, 0, 0, 1}, 32);
    RootSet fine = isolate_roots({-2, 0, 0, 1}, 160);
    Rat c32(1, Int(1) << 31);
    for (const RootBox &b : coarse.roots) CHECK(b.radius < c32);
    Rat c160 = Rat(1) / (Rat(Int(1) << 62) * Rat(Int(1) << 62) * Rat(Int(1) << 35));
    for (const RootBox &b : fine.roots) CHECK(b.radius < c160);
}

TEST_CASE("exact complex helpers") {
    QC a(Rat(1, 2), Rat(3)), b(Rat(2), Rat(-1));
    QC s = qc_add(a, b);
    CHECK(s.re == Rat(5, 2));
    CHECK(s.im == Rat(2));
    QC p = qc_mul(a, b);
    CHECK(p.re == Rat(4));        /* 1/2*2 - 3*(-1) = 1 + 3 */
    CHECK(p.im == Rat(11, 2));    /* 1/2*(-1) + 3*2 */
    CHECK(qc_abs2(b) == Rat(5));
    QC c = qc_conj(a);
    CHECK(c.im == Rat(-3));
    /* qc_eval: (x^2 + 1) at i is 0 */
    QC z = qc_eval(QPoly{Rat(1), Rat(0), Rat(1)}, QC(Rat(0), Rat(1)));
    CHECK(z.re == Rat(0));
    CHECK(z.im == Rat(0));
}
