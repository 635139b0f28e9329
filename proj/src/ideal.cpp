#include "diodef/ideal.hpp"

#include <algorithm>

#include "diodef/fpfactor.hpp"

namespace diodef {

IVec int_coords(const Element &a) {
    QVec q = integral_coords(a);
    IVec out;
    out.reserve(q.size());
    for (const Rat &c : q) {
        if (!is_integer(c)) throw domain_error("element is not integral");
        out.push_back(c.get_num());
    }
    return out;
}

namespace {

/* product of two integral elements, in integral coordinates */
IVec coord_mul(const FieldPtr &K, const IVec &a, const IVec &b) {
    size_t d = K->degree;
    IVec out(d, Int(0));
    for (size_t i = 0; i < d; i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; j++) {
            if (b[j] == 0) continue;
            Int c = a[i] * b[j];
            const IVec &s = K->structure[i][j];
            for (size_t t = 0; t < d; t++)
                if (s[t] != 0) out[t] += c * s[t];
        }
    }
    return out;
}

IVec basis_mul(const FieldPtr &K, size_t i, const IVec &b) {
    size_t d = K->degree;
    IVec out(d, Int(0));
    for (size_t j = 0; j < d; j++) {
        if (b[j] == 0) continue;
        const IVec &s = K->structure[i][j];
        for (size_t t = 0; t < d; t++)
            if (s[t] != 0) out[t] += b[j] * s[t];
    }
    return out;
}

ZMat canonical_hnf(const FieldPtr &K, ZMat rows) {
    HnfResult r = hnf(std::move(rows));
    if (r.h.size() != K->degree) throw domain_error("zero ideal is not representable");
    return r.h;
}

void check_same_field(const Ideal &a, const Ideal &b) {
    if (!same_field(a.field, b.field)) throw domain_error("ideal fields differ");
}

}  // namespace

Int Ideal::norm() const {
    Int n(1);
    for (size_t i = 0; i < hnf.size(); i++) n *= hnf[i][i];
    return n;
}

bool Ideal::is_unit() const { return norm() == 1; }

bool Ideal::contains(const Element &a) const {
    if (!same_field(a.field, field)) throw domain_error("ideal fields differ");
    if (!is_integral(a)) return false;
    return lattice_contains(hnf, int_coords(a));
}

bool Ideal::operator==(const Ideal &o) const {
    return same_field(field, o.field) && hnf == o.hnf;
}

Ideal unit_ideal(const FieldPtr &K) {
    return Ideal{K, z_identity(K->degree)};
}

Ideal ideal_from_gens(const FieldPtr &K, const std::vector<Element> &gens) {
    size_t d = K->degree;
    ZMat rows;
    for (const Element &g : gens) {
        if (!same_field(g.field, K)) throw domain_error("generator from a different field");
        if (g.is_zero()) continue;
        IVec gc = int_coords(g);
        /* close under the basis action: rows g*b_j span the O_K-module */
        for (size_t j = 0; j < d; j++) rows.push_back(basis_mul(K, j, gc));
    }
    if (rows.empty()) throw domain_error("zero ideal is not representable");
    return Ideal{K, canonical_hnf(K, std::move(rows))};
}

Ideal principal_ideal(const Element &a) {
    return ideal_from_gens(a.field, {a});
}

Ideal ideal_from_rows(const FieldPtr &K, const ZMat &rows) {
    ZMat h = canonical_hnf(K, rows);
    /* the lattice must be an O_K-module */
    for (size_t r = 0; r < h.size(); r++)
        for (size_t j = 0; j < K->degree; j++)
            if (!lattice_contains(h, basis_mul(K, j, h[r])))
                throw domain_error("lattice is not an ideal");
    return Ideal{K, std::move(h)};
}

Ideal ideal_mul(const Ideal &a, const Ideal &b) {
    check_same_field(a, b);
    const FieldPtr &K = a.field;
    ZMat rows;
    for (const IVec &x : a.hnf)
        for (const IVec &y : b.hnf) rows.push_back(coord_mul(K, x, y));
    return Ideal{K, canonical_hnf(K, std::move(rows))};
}

Ideal ideal_sum(const Ideal &a, const Ideal &b) {
    check_same_field(a, b);
    ZMat rows = a.hnf;
    rows.insert(rows.end(), b.hnf.begin(), b.hnf.end());
    return Ideal{a.field, canonical_hnf(a.field, std::move(rows))};
}

Ideal ideal_intersect(const Ideal &a, const Ideal &b) {
    check_same_field(a, b);
    return Ideal{a.field, lattice_intersect(a.hnf, b.hnf)};
}

Ideal ideal_pow(const Ideal &a, int e) {
    if (e < 0) throw domain_error("negative ideal power");
    Ideal out = unit_ideal(a.field);
    for (int i = 0; i < e; i++) out = ideal_mul(out, a);
    return out;
}

bool ideal_divides(const Ideal &a, const Ideal &b) {
    check_same_field(a, b);
    for (const IVec &row : b.hnf)
        if (!lattice_contains(a.hnf, row)) return false;
    return true;
}

bool ideals_coprime(const Ideal &a, const Ideal &b) {
    return ideal_sum(a, b).is_unit();
}

Ideal ideal_colon(const Ideal &a, const Ideal &b) {
    check_same_field(a, b);
    const FieldPtr &K = a.field;
    size_t d = K->degree;
    /* x in O_K with x * row_r(b) in a for every r; unknowns are the
     * coordinates of x followed by one multiplier block per condition */
    ZMat m(d + d * d, IVec(d * d, Int(0)));
    for (size_t r = 0; r < d; r++) {
        for (size_t i = 0; i < d; i++) {
            IVec s = basis_mul(K, i, b.hnf[r]);
            for (size_t t = 0; t < d; t++) m[i][r * d + t] = s[t];
        }
        for (size_t t = 0; t < d; t++)
            for (size_t c = 0; c < d; c++) m[d + r * d + t][r * d + c] = -a.hnf[t][c];
    }
    ZMat ker = z_kernel_left(m);
    ZMat rows;
    for (const IVec &k : ker) rows.push_back(IVec(k.begin(), k.begin() + d));
    return ideal_from_rows(K, rows);
}

std::pair<Element, Element> two_element_rep(const Ideal &I) {
    const FieldPtr &K = I.field;
    size_t d = K->degree;
    Element i1 = K->from_rat(Rat(I.norm()));
    for (int radius = 0; radius <= 64; radius++) {
        /* coefficient vectors over the HNF rows with max-norm = radius */
        IVec t(d, Int(0));
        std::vector<long> c(d, -radius);
        while (true) {
            long mx = 0;
            for (size_t i = 0; i < d; i++) mx = std::max(mx, std::abs(c[i]));
            if (mx == radius) {
                IVec coords(d, Int(0));
                for (size_t i = 0; i < d; i++)
                    for (size_t j = 0; j < d; j++) coords[j] += c[i] * I.hnf[i][j];
                Element i2 = K->from_integral(QVec(coords.begin(), coords.end()));
                if (!i2.is_zero() && ideal_from_gens(K, {i1, i2}) == I)
                    return {i1, i2};
            }
            size_t k = 0;
            while (k < d && ++c[k] > radius) c[k++] = -radius;
            if (k == d) break;
        }
    }
    throw resource_error("two_element_rep: search radius exhausted");
}

std::pair<Element, Element> solve_membership(const Element &a, const Element &i1,
                                             const Element &i2) {
    const FieldPtr &K = a.field;
    size_t d = K->degree;
    IVec c1 = int_coords(i1), c2 = int_coords(i2);
    ZMat m(2 * d, IVec(d));
    for (size_t i = 0; i < d; i++) {
        m[i] = basis_mul(K, i, c1);
        m[d + i] = basis_mul(K, i, c2);
    }
    auto sol = z_solve_left(m, int_coords(a));
    if (!sol) throw domain_error("element does not lie in the two-generator ideal");
    QVec xc(sol->begin(), sol->begin() + d), yc(sol->begin() + d, sol->end());
    Element x = K->from_integral(xc), y = K->from_integral(yc);
    if (x * i1 + y * i2 != a) throw domain_error("membership solve failed verification");
    return {x, y};
}

std::pair<Element, Element> solve_coprime(const Ideal &I, const Ideal &J) {
    check_same_field(I, J);
    const FieldPtr &K = I.field;
    size_t d = K->degree;
    ZMat m = I.hnf;
    m.insert(m.end(), J.hnf.begin(), J.hnf.end());
    IVec e0(d, Int(0));
    e0[0] = 1;
    auto sol = z_solve_left(m, e0);
    if (!sol) throw domain_error("ideals are not coprime");
    QVec uc(d, Rat(0));
    for (size_t i = 0; i < d; i++)
        for (size_t j = 0; j < d; j++) uc[j] += Rat((*sol)[i]) * Rat(I.hnf[i][j]);
    Element u = K->from_integral(uc);
    Element v = K->one() - u;
    if (!I.contains(u) || !J.contains(v))
        throw domain_error("coprime solve failed verification");
    return {u, v};
}

Element reduce_mod(const Element &a, const Ideal &I) {
    IVec r = lattice_reduce(I.hnf, int_coords(a));
    return I.field->from_integral(QVec(r.begin(), r.end()));
}

std::vector<Element> residues(const Ideal &I, const Int &cap) {
    if (I.norm() > cap) throw resource_error("residue system larger than the cap");
    const FieldPtr &K = I.field;
    size_t d = K->degree;
    std::vector<Element> out;
    IVec c(d, Int(0));
    while (true) {
        out.push_back(K->from_integral(QVec(c.begin(), c.end())));
        size_t k = d;
        while (k-- > 0) {
            c[k] += 1;
            if (c[k] < I.hnf[k][k]) break;
            c[k] = 0;
            if (k == 0) return out;
        }
    }
}

std::optional<Element> inverse_mod(const Element &a, const Ideal &I) {
    const FieldPtr &K = I.field;
    size_t d = K->degree;
    IVec ac = int_coords(a);
    ZMat m(2 * d, IVec(d));
    for (size_t i = 0; i < d; i++) {
        m[i] = basis_mul(K, i, ac);
        m[d + i] = I.hnf[i];
    }
    IVec e0(d, Int(0));
    e0[0] = 1;
    auto sol = z_solve_left(m, e0);
    if (!sol) return std::nullopt;
    Element x = K->from_integral(QVec(sol->begin(), sol->begin() + d));
    x = reduce_mod(x, I);
    if (!I.contains(x * a - K->one())) throw domain_error("inverse_mod failed verification");
    return x;
}

Element crt(const std::vector<std::pair<Element, Ideal>> &pairs) {
    if (pairs.empty()) throw domain_error("crt: empty input");
    const FieldPtr &K = pairs[0].second.field;
    for (const auto &[r, M] : pairs) {
        if (!same_field(r.field, K) || !same_field(M.field, K))
            throw domain_error("crt: mixed fields");
        if (!is_integral(r)) throw domain_error("crt: residue not integral");
    }
    Element x = reduce_mod(pairs[0].first, pairs[0].second);
    Ideal M = pairs[0].second;
    for (size_t i = 1; i < pairs.size(); i++) {
        const Ideal &J = pairs[i].second;
        auto [u, v] = solve_coprime(M, J); /* throws when not coprime */
        /* u in M, v in J, u + v = 1: u picks the new residue, v keeps x */
        x = x * v + pairs[i].first * u;
        M = ideal_mul(M, J);
        x = reduce_mod(x, M);
    }
    for (const auto &[r, Mi] : pairs)
        if (!Mi.contains(x - r)) throw domain_error("crt failed verification");
    return x;
}

std::pair<Ideal, Ideal> num_den(const Element &a) {
    if (a.is_zero()) throw domain_error("num_den: zero element");
    const FieldPtr &K = a.field;
    QVec coords = integral_coords(a);
    Int q(1);
    for (const Rat &c : coords) {
        Int g;
        mpz_lcm(g.get_mpz_t(), q.get_mpz_t(), c.get_den().get_mpz_t());
        q = g;
    }
    if (q == 1) return {principal_ideal(a), unit_ideal(K)};
    Element qe = K->from_rat(Rat(q));
    Ideal Aq = principal_ideal(Rat(q) * a);
    Ideal Q = principal_ideal(qe);
    Ideal G = ideal_sum(Aq, Q);
    Ideal num = ideal_colon(Aq, G);
    Ideal den = ideal_colon(Q, G);
    if (!ideals_coprime(num, den) || ideal_mul(num, Q) != ideal_mul(den, Aq))
        throw domain_error("num_den failed verification");
    return {num, den};
}

FractionalIdeal fractional_of(const Element &a) {
    if (a.is_zero()) throw domain_error("fractional_of: zero element");
    const FieldPtr &K = a.field;
    QVec coords = integral_coords(a);
    Int q(1);
    for (const Rat &c : coords) {
        Int g;
        mpz_lcm(g.get_mpz_t(), q.get_mpz_t(), c.get_den().get_mpz_t());
        q = g;
    }
    Ideal lat = principal_ideal(Rat(q) * a);
    /* minimality: no prime divides the denominator and every lattice entry */
    for (const auto &[p, e] : int_factor(q)) {
        (void)e;
        while (q % p == 0) {
            bool all = true;
            for (const IVec &row : lat.hnf)
                for (const Int &x : row)
                    if (x % p != 0) all = false;
            if (!all) break;
            for (IVec &row : lat.hnf)
                for (Int &x : row) x /= p;
            q /= p;
        }
    }
    return FractionalIdeal{lat, q};
}

Element solve_vanishing_product(const Ideal &I) {
    const FieldPtr &K = I.field;
    if (I.is_unit()) return K->zero();
    /* split I = J * D with D the dyadic part and J coprime to 2; the sum and
     * colon give the split without factoring anything */
    unsigned long s = mpz_sizeinbase(I.norm().get_mpz_t(), 2) + 1;
    Int p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, s);
    Ideal D = ideal_sum(I, principal_ideal(K->from_rat(Rat(p2))));
    Ideal J = ideal_colon(I, D);
    std::vector<std::pair<Element, Ideal>> pairs;
    for (const auto &[t, M] : {std::pair<int, Ideal>{2, J}, std::pair<int, Ideal>{3, D}}) {
        if (M.is_unit()) continue;
        auto inv = inverse_mod(K->from_rat(Rat(t)), M);
        if (!inv) throw domain_error("solve_vanishing_product: residue inversion failed");
        pairs.push_back({*inv, M});
    }
    Element x = pairs.size() == 1 ? pairs[0].first : crt(pairs);
    Element two = K->from_rat(Rat(2)), three = K->from_rat(Rat(3)), one = K->one();
    if (!I.contains((two * x - one) * (three * x - one)))
        throw domain_error("solve_vanishing_product failed verification");
    return x;
}

std::pair<Element, Element> nonzero_witness(const Element &a) {
    if (a.is_zero()) throw domain_error("nonzero_witness: zero element");
    if (!is_integral(a)) throw domain_error("nonzero_witness: input not integral");
    const FieldPtr &K = a.field;
    Element x = solve_vanishing_product(principal_ideal(a));
    Element two = K->from_rat(Rat(2)), three = K->from_rat(Rat(3)), one = K->one();
    Element w = (two * x - one) * (three * x - one);
    Element y = w / a;
    if (!is_integral(y) || y * a != w) throw domain_error("nonzero_witness failed verification");
    return {x, y};
}

int valuation(const Ideal &I, const Ideal &P) {
    int v = 0;
    Ideal cur = I;
    while (ideal_divides(P, cur)) {
        cur = ideal_colon(cur, P);
        v++;
        if (v > 4096) throw domain_error("valuation: unreasonable exponent");
    }
    return v;
}

FieldExtension make_extension(const FieldEmbedding &emb) {
    FieldExtension ext;
    ext.base = emb.src;
    ext.top = emb.dst;
    ext.emb = emb;
    if (emb.dst->degree % emb.src->degree != 0)
        throw domain_error("extension degrees incompatible");
    ext.relative_degree = (int)(emb.dst->degree / emb.src->degree);
    return ext;
}

FieldExtension make_extension(const FieldPtr &base, const FieldPtr &top) {
    auto emb = find_embedding(base, top);
    if (!emb) throw domain_error("no embedding of the base field into the top field");
    return make_extension(*emb);
}

Ideal extend_ideal(const Ideal &I, const FieldExtension &ext) {
    if (!same_field(I.field, ext.base)) throw domain_error("extend_ideal: wrong base field");
    std::vector<Element> gens;
    for (const IVec &row : I.hnf) {
        Element g = ext.base->from_integral(QVec(row.begin(), row.end()));
        Element img = embed_element(ext.emb, g);
        if (!is_integral(img)) throw domain_error("embedding does not preserve integrality");
        gens.push_back(img);
    }
    return ideal_from_gens(ext.top, gens);
}

bool congruent_mod(const Element &alpha, const Element &beta, const Ideal &I,
                   const FieldExtension &ext) {
    if (!same_field(alpha.field, ext.top) || !same_field(beta.field, ext.top))
        throw domain_error("congruent_mod: elements must lie in the top field");
    Element diff = alpha - beta;
    if (diff.is_zero()) return true;
    Ideal ext_I = extend_ideal(I, ext);
    auto [num, den] = num_den(diff);
    (void)den;
    return ideal_divides(ext_I, num);
}

}  // namespace diodef
