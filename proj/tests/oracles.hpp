#ifndef DIODEF_TESTS_ORACLES_HPP
#define DIODEF_TESTS_ORACLES_HPP

/* Reference implementations for cross-checking, written as plain textbook
 * algorithms against gmp vectors only.  Nothing here shares code with the
 * library paths under test; everything is deliberately naive and slow.
 */

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diodef/numfield.hpp"

namespace oracle {

using diodef::Element;
using diodef::FieldPtr;
using diodef::Int;
using diodef::IVec;
using diodef::QPoly;
using diodef::QVec;
using diodef::Rat;
using diodef::ZMat;
using diodef::ZPoly;

/* row HNF by column-wise gcd elimination; canonical: positive pivots,
 * entries above a pivot reduced into [0, pivot), zero rows dropped */
inline ZMat hnf_naive(ZMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            size_t first = rows;
            int nonzero = 0;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0) {
                    if (!nonzero) first = i;
                    ++nonzero;
                }
            if (nonzero == 0) {
                first = rows;
                break;
            }
            if (nonzero == 1) {
                std::swap(m[r], m[first]);
                break;
            }
            size_t second = first + 1;
            while (m[second][c] == 0) ++second;
            if (mpz_cmpabs(m[first][c].get_mpz_t(), m[second][c].get_mpz_t()) > 0)
                std::swap(m[first], m[second]);
            Int q = m[second][c] / m[first][c];  /* truncated, remainder shrinks */
            for (size_t j = 0; j < cols; ++j) m[second][j] -= q * m[first][j];
        }
        if (r < rows && m[r][c] != 0) {
            pivot_col.push_back(c);
            ++r;
        }
    }
    m.resize(r);
    for (size_t i = 0; i < r; ++i) {
        size_t c = pivot_col[i];
        if (m[i][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[i][j] = -m[i][j];
        for (size_t k = 0; k < i; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[k][c].get_mpz_t(), m[i][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[k][j] -= q * m[i][j];
        }
    }
    return m;
}

/* same elimination carried out on [m | I]; rows of u past the rank are an
 * exact basis of the left integer kernel */
struct HnfTrace {
    ZMat h;
    ZMat u;
    size_t rank = 0;
};

inline HnfTrace hnf_naive_transform(ZMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    ZMat u(rows, IVec(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    };
    auto axpy = [&](size_t dst, const Int &q, size_t src) {
        for (size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
        for (size_t j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            size_t first = rows;
            int nonzero = 0;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0) {
                    if (!nonzero) first = i;
                    ++nonzero;
                }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                swap_rows(r, first);
                break;
            }
            size_t second = first + 1;
            while (m[second][c] == 0) ++second;
            if (mpz_cmpabs(m[first][c].get_mpz_t(), m[second][c].get_mpz_t()) > 0)
                swap_rows(first, second);
            axpy(second, m[second][c] / m[first][c], first);
        }
        if (r < rows && m[r][c] != 0) ++r;
    }
    HnfTrace t;
    t.rank = r;
    t.h.assign(m.begin(), m.begin() + r);
    t.u = std::move(u);
    return t;
}

/* naive Gauss: one rational solution of x * m = b, or nothing */
inline std::optional<QVec> solve_left_naive(const std::vector<QVec> &mat, const QVec &b) {
    size_t rows = mat.size();
    size_t cols = rows ? mat[0].size() : b.size();
    /* augmented transpose: columns of m as equations over the unknowns x_i */
    std::vector<QVec> a(cols, QVec(rows + 1, Rat(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[j][i] = mat[i][j];
    for (size_t j = 0; j < cols; ++j) a[j][rows] = b[j];
    size_t r = 0;
    std::vector<long> where(rows, -1);
    for (size_t c = 0; c < rows && r < cols; ++c) {
        size_t p = r;
        while (p < cols && a[p][c] == 0) ++p;
        if (p == cols) continue;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][c];
        for (size_t j = 0; j <= rows; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < cols; ++i)
            if (i != r && a[i][c] != 0) {
                Rat f = a[i][c];
                for (size_t j = 0; j <= rows; ++j) a[i][j] -= f * a[r][j];
            }
        where[c] = (long)r;
        ++r;
    }
    for (size_t i = r; i < cols; ++i)
        if (a[i][rows] != 0) return std::nullopt;
    QVec x(rows, Rat(0));
    for (size_t c = 0; c < rows; ++c)
        if (where[c] >= 0) x[c] = a[(size_t)where[c]][rows];
    return x;
}

inline bool in_lattice_naive(const ZMat &basis, const IVec &v) {
    std::vector<QVec> m(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        m[i] = QVec(basis[i].begin(), basis[i].end());
    QVec b(v.begin(), v.end());
    auto x = solve_left_naive(m, b);
    if (!x) return false;
    for (const Rat &c : *x)
        if (c.get_den() != 1) return false;
    return true;
}

/* L(A) n L(B) through the exact integer kernel of the stacked matrix */
inline ZMat intersect_naive(const ZMat &A, const ZMat &B) {
    size_t d = A[0].size();
    ZMat stacked = A;
    for (const IVec &row : B) {
        IVec neg(d);
        for (size_t j = 0; j < d; ++j) neg[j] = -row[j];
        stacked.push_back(neg);
    }
    HnfTrace t = hnf_naive_transform(stacked);
    ZMat out;
    for (size_t i = t.rank; i < t.u.size(); ++i) {
        IVec x(d, 0);
        for (size_t k = 0; k < A.size(); ++k)
            for (size_t j = 0; j < d; ++j) x[j] += t.u[i][k] * A[k][j];
        out.push_back(std::move(x));
    }
    return hnf_naive(out);
}

/* ---- field arithmetic redone from the defining polynomial ---- */

inline QPoly poly_mul_mod(const QPoly &a, const QPoly &b, const ZPoly &f) {
    size_t d = f.size() - 1;
    std::vector<Rat> prod(2 * d, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (a[i] != 0 && b[j] != 0) prod[i + j] += a[i] * b[j];
    for (size_t k = 2 * d; k-- > d;) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        prod[k] = 0;
        for (size_t j = 0; j < d; ++j) prod[k - d + j] -= c * Rat(f[j]);
    }
    prod.resize(d);
    return prod;
}

/* power coords of the element with the given integral coords (basis rows as
 * supplied data, combination recomputed here) */
inline QVec integral_to_pow(const FieldPtr &K, const IVec &coords) {
    size_t d = K->degree;
    QVec p(d, Rat(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) p[j] += Rat(coords[i]) * K->basis[i][j];
    return p;
}

/* integral coords from power coords by solving against the basis matrix */
inline std::optional<IVec> pow_to_integral(const FieldPtr &K, const QVec &pow) {
    auto x = solve_left_naive(K->basis, pow);
    if (!x) return std::nullopt;
    IVec out(K->degree);
    for (size_t i = 0; i < K->degree; ++i) {
        if ((*x)[i].get_den() != 1) return std::nullopt;
        out[i] = (*x)[i].get_num();
    }
    return out;
}

/* product lattice of two ideals: every pairwise product of basis rows,
 * multiplied mod the defining polynomial */
inline ZMat mul_lattice_naive(const FieldPtr &K, const ZMat &A, const ZMat &B) {
    ZMat rows;
    for (const IVec &ra : A)
        for (const IVec &rb : B) {
            QPoly prod = poly_mul_mod(integral_to_pow(K, ra), integral_to_pow(K, rb), K->poly);
            auto ic = pow_to_integral(K, prod);
            if (!ic) throw std::logic_error("oracle: product left the order");
            rows.push_back(std::move(*ic));
        }
    return hnf_naive(rows);
}

inline ZMat sum_lattice_naive(const ZMat &A, const ZMat &B) {
    ZMat rows = A;
    rows.insert(rows.end(), B.begin(), B.end());
    return hnf_naive(rows);
}

inline bool subset_naive(const ZMat &inner, const ZMat &outer) {
    for (const IVec &row : inner)
        if (!in_lattice_naive(outer, row)) return false;
    return true;
}

/* ---- deterministic random inputs ---- */

inline long rnd_in(std::mt19937_64 &g, long lo, long hi) {
    return lo + (long)(g() % (unsigned long)(hi - lo + 1));
}

inline Element rnd_element(std::mt19937_64 &g, const FieldPtr &K, long radius) {
    QVec c(K->degree, Rat(0));
    for (auto &x : c) x = Rat(rnd_in(g, -radius, radius));
    return K->from_integral(c);
}

inline Element rnd_nonzero(std::mt19937_64 &g, const FieldPtr &K, long radius) {
    while (true) {
        Element a = rnd_element(g, K, radius);
        if (!a.is_zero()) return a;
    }
}

}  // namespace oracle

#endif
