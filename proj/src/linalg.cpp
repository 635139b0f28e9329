#include "diodef/linalg.hpp"

#include <algorithm>

namespace diodef {

QMat q_from_z(const ZMat &m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); i++)
        for (const Int &x : m[i]) r[i].push_back(Rat(x));
    return r;
}

QMat q_identity(size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

ZMat z_identity(size_t n) {
    ZMat m(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

Rat q_det(QMat m) {
    size_t n = m.size();
    if (n == 0) return Rat(1);
    Rat det(1);
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) piv++;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t j = col; j < n; j++) m[col][j] *= inv;
        for (size_t i = col + 1; i < n; i++) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < n; j++) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

/* row-reduce in place; returns pivot columns */
static std::vector<size_t> rref(QMat &m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t col = 0; col < cols && r < rows; col++) {
        size_t piv = r;
        while (piv < rows && m[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat inv = Rat(1) / m[r][col];
        for (size_t j = col; j < cols; j++) m[r][j] *= inv;
        for (size_t i = 0; i < rows; i++) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; j++) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        r++;
    }
    return pivots;
}

size_t q_rank(QMat m) { return rref(m).size(); }

std::optional<QVec> q_solve_right(const QMat &m, const QVec &b) {
    /* augment [m | b], reduce, read off */
    size_t rows = m.size();
    if (rows == 0) return QVec{};
    size_t cols = m[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] == cols) return std::nullopt;  // pivot in the rhs column
        x[pivots[i]] = aug[i][cols];
    }
    /* consistency of non-pivot rows is implied by rref with the rhs column */
    return x;
}

std::optional<QVec> q_solve_left(const QMat &m, const QVec &b) {
    /* x * m = b  <=>  m^T x^T = b^T */
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : b.size();
    QMat t(cols, QVec(rows));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) t[j][i] = m[i][j];
    return q_solve_right(t, b);
}

std::optional<QMat> q_inverse(const QMat &m) {
    size_t n = m.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) inv[i][j] = aug[i][n + j];
    return inv;
}

QMat q_kernel_left(const QMat &m) {
    /* kernel of m^T acting on the right = left kernel of m */
    size_t rows = m.size();
    if (rows == 0) return {};
    size_t cols = m[0].size();
    QMat t(cols, QVec(rows));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) t[j][i] = m[i][j];
    auto pivots = rref(t);
    std::vector<bool> is_pivot(rows, false);
    for (size_t p : pivots) is_pivot[p] = true;
    QMat kern;
    for (size_t free = 0; free < rows; free++) {
        if (is_pivot[free]) continue;
        QVec v(rows, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); i++) v[pivots[i]] = -t[i][free];
        kern.push_back(v);
    }
    return kern;
}

QMat q_mul(const QMat &a, const QMat &b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QMat r(n, QVec(m, Rat(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < k; j++) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; l++) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

/* shared HNF core; ops mirrored onto *u when present */
static void hnf_core(ZMat &a, ZMat *u, std::vector<size_t> &pivots, size_t &rank) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    auto subtract = [&](size_t dst, size_t src, const Int &q) {
        for (size_t j = 0; j < cols; j++) a[dst][j] -= q * a[src][j];
        if (u)
            for (size_t j = 0; j < (*u)[dst].size(); j++) (*u)[dst][j] -= q * (*u)[src][j];
    };
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };
    auto negate = [&](size_t i) {
        for (auto &x : a[i]) x = -x;
        if (u)
            for (auto &x : (*u)[i]) x = -x;
    };

    size_t r = 0;
    pivots.clear();
    for (size_t col = 0; col < cols && r < rows; col++) {
        /* Euclidean elimination in this column below row r */
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; i++) {
                if (a[i][col] == 0) continue;
                if (best == rows || mpz_cmpabs(a[i][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0) best = i;
            }
            if (best == rows) break;  // column is zero below r
            if (best != r) swap_rows(best, r);
            bool others = false;
            for (size_t i = r + 1; i < rows; i++) {
                if (a[i][col] == 0) continue;
                Int q = fdiv(a[i][col], a[r][col]);
                subtract(i, r, q);
                if (a[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (r < rows && a[r][col] != 0) {
            if (a[r][col] < 0) negate(r);
            for (size_t i = 0; i < r; i++) {
                Int q = fdiv(a[i][col], a[r][col]);
                if (q != 0) subtract(i, r, q);
            }
            pivots.push_back(col);
            r++;
        }
    }
    rank = r;
}

HnfResult hnf(ZMat rows) {
    HnfResult res;
    size_t rank = 0;
    hnf_core(rows, nullptr, res.pivots, rank);
    res.h.assign(rows.begin(), rows.begin() + rank);
    return res;
}

HnfTransformResult hnf_transform(ZMat rows) {
    HnfTransformResult res;
    res.u = z_identity(rows.size());
    hnf_core(rows, &res.u, res.pivots, res.rank);
    res.h.assign(rows.begin(), rows.begin() + res.rank);
    return res;
}

std::optional<IVec> z_solve_left(const ZMat &m, const IVec &b) {
    auto tr = hnf_transform(m);
    IVec residual = b;
    IVec y(tr.rank, Int(0));
    for (size_t i = 0; i < tr.rank; i++) {
        size_t c = tr.pivots[i];
        if (!divides(tr.h[i][c], residual[c])) return std::nullopt;
        Int q = residual[c] / tr.h[i][c];
        y[i] = q;
        if (q != 0)
            for (size_t j = 0; j < residual.size(); j++) residual[j] -= q * tr.h[i][j];
    }
    for (const Int &x : residual)
        if (x != 0) return std::nullopt;
    IVec sol(m.size(), Int(0));
    for (size_t i = 0; i < tr.rank; i++)
        if (y[i] != 0)
            for (size_t j = 0; j < sol.size(); j++) sol[j] += y[i] * tr.u[i][j];
    return sol;
}

ZMat z_kernel_left(const ZMat &m) {
    auto tr = hnf_transform(m);
    ZMat kern(tr.u.begin() + tr.rank, tr.u.end());
    return kern;
}

bool lattice_contains(const ZMat &h, const IVec &v) {
    IVec w = v;
    size_t n = h.size();
    for (size_t i = 0; i < n; i++) {
        if (!divides(h[i][i], w[i])) return false;
        Int q = w[i] / h[i][i];
        if (q != 0)
            for (size_t j = i; j < n; j++) w[j] -= q * h[i][j];
    }
    for (const Int &x : w)
        if (x != 0) return false;
    return true;
}

IVec lattice_reduce(const ZMat &h, const IVec &v) {
    IVec w = v;
    size_t n = h.size();
    for (size_t i = 0; i < n; i++) {
        Int q = fdiv(w[i], h[i][i]);
        if (q != 0)
            for (size_t j = i; j < n; j++) w[j] -= q * h[i][j];
    }
    return w;
}

ZMat lattice_intersect(const ZMat &a, const ZMat &b) {
    /* left kernel of [a; b]: rows (u, v) with u*a = -v*b give intersection
     * elements u*a.  For full-rank a, b the result is again full rank. */
    size_t n = a.size();
    ZMat stacked;
    stacked.insert(stacked.end(), a.begin(), a.end());
    stacked.insert(stacked.end(), b.begin(), b.end());
    ZMat kern = z_kernel_left(stacked);
    ZMat gens;
    for (const IVec &uv : kern) {
        IVec w(n, Int(0));
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++) w[j] += uv[i] * a[i][j];
        gens.push_back(w);
    }
    return hnf(gens).h;
}

Int lattice_det(const ZMat &h) {
    Int d(1);
    for (size_t i = 0; i < h.size(); i++) d *= h[i][i];
    return d;
}

}  // namespace diodef
