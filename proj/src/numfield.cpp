#include "diodef/numfield.hpp"

#include <algorithm>

namespace diodef {

bool Element::is_zero() const {
    for (const Rat &c : pow)
        if (c != 0) return false;
    return true;
}

bool Element::operator==(const Element &o) const {
    require_same_field(*this, o);
    return pow == o.pow;
}

bool same_field(const FieldPtr &a, const FieldPtr &b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->poly == b->poly && a->basis == b->basis;
}

void require_same_field(const Element &a, const Element &b) {
    if (!same_field(a.field, b.field))
        throw domain_error("elements of different fields");
}

Element operator+(const Element &a, const Element &b) {
    require_same_field(a, b);
    QVec c(a.pow.size());
    for (size_t i = 0; i < c.size(); i++) c[i] = a.pow[i] + b.pow[i];
    return {a.field, std::move(c)};
}

Element operator-(const Element &a, const Element &b) {
    require_same_field(a, b);
    QVec c(a.pow.size());
    for (size_t i = 0; i < c.size(); i++) c[i] = a.pow[i] - b.pow[i];
    return {a.field, std::move(c)};
}

Element operator-(const Element &a) {
    QVec c(a.pow.size());
    for (size_t i = 0; i < c.size(); i++) c[i] = -a.pow[i];
    return {a.field, std::move(c)};
}

Element operator*(const Element &a, const Element &b) {
    require_same_field(a, b);
    size_t d = a.field->degree;
    QVec conv(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; i++) {
        if (a.pow[i] == 0) continue;
        for (size_t j = 0; j < d; j++) conv[i + j] += a.pow[i] * b.pow[j];
    }
    /* fold theta^(d+k) down through the reduction table */
    for (size_t k = 2 * d - 2; k + 1 > d; k--) {
        if (conv[k] == 0) continue;
        const IVec &row = a.field->power_reduction[k - d];
        for (size_t j = 0; j < d; j++) conv[j] += conv[k] * row[j];
        conv[k] = 0;
    }
    conv.resize(d);
    return {a.field, std::move(conv)};
}

Element operator*(const Rat &c, const Element &a) {
    QVec v(a.pow.size());
    for (size_t i = 0; i < v.size(); i++) v[i] = c * a.pow[i];
    return {a.field, std::move(v)};
}

QMat mult_matrix(const Element &a) {
    size_t d = a.field->degree;
    QMat m;
    m.reserve(d);
    Element cur = a;
    Element th = a.field->theta();
    for (size_t j = 0; j < d; j++) {
        m.push_back(cur.pow);
        if (j + 1 < d) cur = cur * th;
    }
    return m;
}

Element inverse(const Element &a) {
    if (a.is_zero()) throw domain_error("inverse of zero");
    size_t d = a.field->degree;
    QVec e0(d, Rat(0));
    e0[0] = 1;
    auto x = q_solve_left(mult_matrix(a), e0);
    if (!x) throw domain_error("inverse: singular multiplication matrix");
    return {a.field, *x};
}

Element operator/(const Element &a, const Element &b) { return a * inverse(b); }

Element pow_int(const Element &a, const Int &e) {
    if (e < 0) return pow_int(inverse(a), -e);
    Element acc = a.field->one(), base = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rat trace(const Element &a) {
    QMat m = mult_matrix(a);
    Rat t(0);
    for (size_t i = 0; i < m.size(); i++) t += m[i][i];
    return t;
}

Rat norm(const Element &a) { return q_det(mult_matrix(a)); }

QPoly min_poly(const Element &a) {
    size_t d = a.field->degree;
    QMat powers;
    Element cur = a.field->one();
    for (size_t k = 0; k <= d; k++) {
        powers.push_back(cur.pow);
        /* does a^k already depend linearly on lower powers? */
        QMat sub(powers.begin(), powers.end() - 1);
        auto sol = q_solve_left(sub, powers.back());
        if (sol) {
            QPoly mp;
            for (const Rat &c : *sol) mp.push_back(-c);
            mp.push_back(Rat(1));
            return mp;
        }
        cur = cur * a;
    }
    throw domain_error("min_poly: no dependence found (broken field)");
}

Element NumberField::zero() const { return {self(), QVec(degree, Rat(0))}; }

Element NumberField::one() const {
    QVec c(degree, Rat(0));
    c[0] = 1;
    return {self(), std::move(c)};
}

Element NumberField::theta() const {
    QVec c(degree, Rat(0));
    if (degree == 1) {
        /* theta is the rational root of the linear defining polynomial */
        c[0] = Rat(-poly[0], poly[1]);
    } else {
        c[1] = 1;
    }
    return {self(), std::move(c)};
}

Element NumberField::from_rat(const Rat &q) const {
    QVec c(degree, Rat(0));
    c[0] = q;
    return {self(), std::move(c)};
}

Element NumberField::from_pow(QVec coords) const {
    if (coords.size() != degree) throw domain_error("coordinate length mismatch");
    return {self(), std::move(coords)};
}

Element NumberField::from_integral(const QVec &coords) const {
    if (coords.size() != degree) throw domain_error("coordinate length mismatch");
    QVec pow(degree, Rat(0));
    for (size_t i = 0; i < degree; i++)
        for (size_t j = 0; j < degree; j++) pow[j] += coords[i] * basis[i][j];
    return {self(), std::move(pow)};
}

QVec integral_coords(const Element &a) {
    const NumberField &f = *a.field;
    QVec c(f.degree, Rat(0));
    for (size_t i = 0; i < f.degree; i++)
        for (size_t j = 0; j < f.degree; j++) c[j] += a.pow[i] * f.basis_inv[i][j];
    return c;
}

bool is_integral(const Element &a) {
    for (const Rat &c : integral_coords(a))
        if (!is_integer(c)) return false;
    return true;
}

/* ------------------------- construction ------------------------- */

QMat builtin_basis_for(const ZPoly &poly);  // catalogue_builtin.cpp

static void verify_basis(NumberField &f) {
    size_t d = f.degree;
    if (f.basis.size() != d) throw domain_error("basis: wrong row count");
    for (const QVec &row : f.basis)
        if (row.size() != d) throw domain_error("basis: wrong row length");
    auto inv = q_inverse(f.basis);
    if (!inv) throw domain_error("basis: rows are linearly dependent");
    f.basis_inv = *inv;

    /* 1 and theta must lie in the lattice, with integer coordinates */
    auto coords_of = [&](const Element &e) { return integral_coords(e); };
    auto integral_vec = [](const QVec &v) {
        for (const Rat &c : v)
            if (!is_integer(c)) return false;
        return true;
    };
    if (!integral_vec(coords_of(f.one())))
        throw domain_error("basis: lattice does not contain 1");
    if (!integral_vec(coords_of(f.theta())))
        throw domain_error("basis: lattice does not contain theta");
    /* multiplicative closure: every product b_i b_j has integer coordinates */
    f.structure.assign(d, std::vector<IVec>(d));
    for (size_t i = 0; i < d; i++) {
        Element bi = f.from_pow(f.basis[i]);
        for (size_t j = 0; j <= i; j++) {
            Element bj = f.from_pow(f.basis[j]);
            QVec c = coords_of(bi * bj);
            if (!integral_vec(c))
                throw domain_error("basis: not closed under multiplication");
            IVec ic;
            for (const Rat &x : c) ic.push_back(x.get_num());
            f.structure[i][j] = ic;
            f.structure[j][i] = ic;
        }
    }
    /* convention relied on elsewhere (contraction, residues): b_0 = 1 */
    QVec one_coords = coords_of(f.one());
    for (size_t j = 0; j < d; j++)
        if (one_coords[j] != (j == 0 ? 1 : 0))
            throw domain_error("basis: first basis element must be 1");
}

static void compute_disc(NumberField &f) {
    size_t d = f.degree;
    QMat g(d, QVec(d));
    std::vector<Element> b;
    for (size_t i = 0; i < d; i++) b.push_back(f.from_pow(f.basis[i]));
    for (size_t i = 0; i < d; i++)
        for (size_t j = 0; j <= i; j++) {
            Rat t = trace(b[i] * b[j]);
            g[i][j] = t;
            g[j][i] = t;
        }
    Rat det = q_det(g);
    if (!is_integer(det) || det == 0)
        throw domain_error("discriminant is not a nonzero integer");
    f.disc = det.get_num();
}

static void compute_kd_generators(NumberField &f) {
    size_t d = f.degree;
    /* candidates: theta, the basis elements, and small sums with theta */
    std::vector<Element> cands{f.theta()};
    for (size_t i = 1; i < d; i++) cands.push_back(f.from_pow(f.basis[i]));
    for (size_t i = 1; i < d; i++)
        cands.push_back(f.theta() + f.from_pow(f.basis[i]));
    for (const Element &g : cands) {
        if (!is_integral(g)) continue;
        QPoly mp = min_poly(g);
        if (q_deg(mp) != (int)d) continue;
        ZPoly mz;
        bool ok = true;
        for (const Rat &c : mp) {
            if (!is_integer(c)) { ok = false; break; }
            mz.push_back(c.get_num());
        }
        if (!ok) continue;
        Int dp = (d == 1) ? Int(1) : z_discriminant(mz);
        Int idx2 = dp / f.disc, idx;
        if (d > 1 && (dp % f.disc != 0 || !perfect_square_root(idx2, idx)))
            throw domain_error("inconsistent generator discriminant");
        if (d == 1) idx = 1;
        f.kd_gens.push_back({g, mz, idx});
    }
    std::sort(f.kd_gens.begin(), f.kd_gens.end(),
              [](const KdGenerator &a, const KdGenerator &b) { return a.index < b.index; });
}

FieldPtr make_field(const ZPoly &poly_in, std::optional<QMat> basis, const std::string &name) {
    ZPoly poly = poly_in;
    z_trim(poly);
    if (z_deg(poly) < 1) throw domain_error("defining polynomial must have degree >= 1");
    if (!is_monic(poly)) throw domain_error("defining polynomial must be monic");
    if (z_deg(poly) > 1 && !z_irreducible(poly))
        throw domain_error("defining polynomial is reducible");

    auto f = std::make_shared<NumberField>();
    f->poly = poly;
    f->degree = z_deg(poly);
    f->name = name;
    f->self_ = f;

    size_t d = f->degree;
    /* theta^d = -(f_0 + ... + f_{d-1} theta^{d-1}); build the full table */
    if (d >= 2) {
        f->power_reduction.assign(d - 1, IVec(d, Int(0)));
        for (size_t j = 0; j < d; j++) f->power_reduction[0][j] = -poly[j];
        for (size_t k = 1; k + 1 < d; k++) {
            /* theta^(d+k) = theta * theta^(d+k-1) */
            const IVec &prev = f->power_reduction[k - 1];
            IVec cur(d, Int(0));
            for (size_t j = 0; j + 1 < d; j++) cur[j + 1] += prev[j];
            for (size_t j = 0; j < d; j++) cur[j] += prev[d - 1] * f->power_reduction[0][j];
            f->power_reduction[k] = cur;
        }
    }

    f->basis = basis ? *basis : builtin_basis_for(poly);
    verify_basis(*f);
    compute_disc(*f);
    compute_kd_generators(*f);
    return f;
}

}  // namespace diodef
