#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diodef/linalg.hpp"
#include "oracles.hpp"

using namespace diodef;

namespace {

ZMat rnd_zmat(std::mt19937_64 &g, size_t rows, size_t cols, long bound) {
    ZMat m(rows, IVec(cols));
    for (auto &r : m)
        for (auto &x : r) x = oracle::rnd_in(g, -bound, bound);
    return m;
}

}  // namespace

TEST_CASE("hnf matches a naive gcd elimination on random matrices") {
    std::mt19937_64 g(101);
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 1 + (size_t)oracle::rnd_in(g, 0, 4);
        size_t cols = 1 + (size_t)oracle::rnd_in(g, 0, 3);
        ZMat m = rnd_zmat(g, rows, cols, 9);
        HnfResult h = hnf(m);
        CHECK(h.h == oracle::hnf_naive(m));
        /* canonical: idempotent, pivots strictly right-moving and positive */
        CHECK(hnf(h.h).h == h.h);
        for (size_t i = 0; i < h.h.size(); ++i) {
            CHECK(h.h[i][h.pivots[i]] > 0);
            if (i > 0) CHECK(h.pivots[i] > h.pivots[i - 1]);
        }
    }
}

TEST_CASE("hnf_transform produces a unimodular certificate and the left kernel") {
    std::mt19937_64 g(102);
    for (int iter = 0; iter < 100; ++iter) {
        size_t rows = 1 + (size_t)oracle::rnd_in(g, 0, 4);
        size_t cols = 1 + (size_t)oracle::rnd_in(g, 0, 3);
        ZMat m = rnd_zmat(g, rows, cols, 9);
        HnfTransformResult t = hnf_transform(m);
        CHECK(t.h == hnf(m).h);
        CHECK(t.u.size() == rows);
        Rat du = q_det(q_from_z(t.u));
        CHECK((du == 1 || du == -1));
        /* u * m == [h; 0] exactly */
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                Int s = 0;
                for (size_t k = 0; k < rows; ++k) s += t.u[i][k] * m[k][j];
                CHECK(s == (i < t.rank ? t.h[i][j] : Int(0)));
            }
    }
}

TEST_CASE("z_solve_left finds exact solutions and refuses impossible systems") {
    std::mt19937_64 g(103);
    for (int iter = 0; iter < 100; ++iter) {
        size_t rows = 1 + (size_t)oracle::rnd_in(g, 0, 3);
        size_t cols = 1 + (size_t)oracle::rnd_in(g, 0, 3);
        ZMat m = rnd_zmat(g, rows, cols, 6);
        /* b in the row space by construction */
        IVec x0(rows);
        for (auto &x : x0) x = oracle::rnd_in(g, -5, 5);
        IVec b(cols, 0);
        for (size_t j = 0; j < cols; ++j)
            for (size_t i = 0; i < rows; ++i) b[j] += x0[i] * m[i][j];
        auto x = z_solve_left(m, b);
        REQUIRE(x.has_value());
        for (size_t j = 0; j < cols; ++j) {
            Int s = 0;
            for (size_t i = 0; i < rows; ++i) s += (*x)[i] * m[i][j];
            CHECK(s == b[j]);
        }
    }
    CHECK_FALSE(z_solve_left({{2}}, {1}).has_value());
    CHECK_FALSE(z_solve_left({{2, 0}, {0, 2}}, {1, 1}).has_value());
}

TEST_CASE("z_kernel_left spans exactly the integer relations") {
    std::mt19937_64 g(104);
    for (int iter = 0; iter < 60; ++iter) {
        size_t rows = 2 + (size_t)oracle::rnd_in(g, 0, 3);
        size_t cols = 1 + (size_t)oracle::rnd_in(g, 0, 2);
        ZMat m = rnd_zmat(g, rows, cols, 5);
        ZMat ker = z_kernel_left(m);
        CHECK(ker.size() == rows - hnf(m).h.size());
        for (const IVec &v : ker)
            for (size_t j = 0; j < cols; ++j) {
                Int s = 0;
                for (size_t i = 0; i < rows; ++i) s += v[i] * m[i][j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("rational solve, inverse, kernel") {
    QMat m = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(q_det(m) == Rat(-2));
    CHECK(q_rank(m) == 2);
    auto inv = q_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(q_mul(m, *inv) == q_identity(2));
    CHECK(q_mul(*inv, m) == q_identity(2));

    auto x = q_solve_left(m, {Rat(1), Rat(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] * m[0][0] + (*x)[1] * m[1][0] == Rat(1));
    CHECK((*x)[0] * m[0][1] + (*x)[1] * m[1][1] == Rat(0));

    auto y = q_solve_right(m, {Rat(5), Rat(6)});
    REQUIRE(y.has_value());
    CHECK(m[0][0] * (*y)[0] + m[0][1] * (*y)[1] == Rat(5));

    QMat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(q_rank(sing) == 1);
    CHECK(q_det(sing) == Rat(0));
    CHECK_FALSE(q_inverse(sing).has_value());
    CHECK_FALSE(q_solve_left(sing, {Rat(0), Rat(1)}).has_value());
    QMat ker = q_kernel_left(sing);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] * sing[0][0] + ker[0][1] * sing[1][0] == Rat(0));
    CHECK(ker[0][0] * sing[0][1] + ker[0][1] * sing[1][1] == Rat(0));
}

TEST_CASE("full-rank lattice helpers agree with the naive oracle") {
    std::mt19937_64 g(105);
    for (int iter = 0; iter < 100; ++iter) {
        size_t n = 2 + (size_t)oracle::rnd_in(g, 0, 1);
        ZMat a, b;
        do {
            a = oracle::hnf_naive(rnd_zmat(g, n + 1, n, 8));
        } while (a.size() != n);
        do {
            b = oracle::hnf_naive(rnd_zmat(g, n + 1, n, 8));
        } while (b.size() != n);

        ZMat cap = lattice_intersect(a, b);
        CHECK(cap == oracle::intersect_naive(a, b));

        /* membership: every intersection vector sits in both lattices */
        for (const IVec &v : cap) {
            CHECK(lattice_contains(a, v));
            CHECK(lattice_contains(b, v));
            CHECK(oracle::in_lattice_naive(a, v));
        }
        Int prod = 1;
        for (size_t i = 0; i < n; ++i) prod *= a[i][i];
        CHECK(lattice_det(a) == prod);

        IVec v(n);
        for (auto &x : v) x = oracle::rnd_in(g, -20, 20);
        IVec r = lattice_reduce(a, v);
        for (size_t i = 0; i < n; ++i) {
            CHECK(r[i] >= 0);
            CHECK(r[i] < a[i][i]);
        }
        /* v - r lies in the lattice */
        IVec diff(n);
        for (size_t i = 0; i < n; ++i) diff[i] = v[i] - r[i];
        CHECK(lattice_contains(a, diff));
        CHECK(lattice_reduce(a, r) == r);
    }
}
