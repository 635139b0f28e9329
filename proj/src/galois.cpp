#include "diodef/galois.hpp"

#include <algorithm>
#include <map>

namespace diodef {

int e_deg(const EPoly &p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return (int)i;
    return -1;
}

void e_trim(EPoly &p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

EPoly e_from_q(const FieldPtr &K, const QPoly &g) {
    EPoly out;
    for (const Rat &c : g) out.push_back(K->from_rat(c));
    e_trim(out);
    return out;
}

EPoly e_derivative(const EPoly &p) {
    EPoly out;
    for (size_t i = 1; i < p.size(); i++) out.push_back(Rat((long)i) * p[i]);
    e_trim(out);
    return out;
}

Element e_eval(const EPoly &p, const Element &x) {
    Element v = x.field->zero();
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

EPoly e_mul(const EPoly &a, const EPoly &b) {
    if (a.empty() || b.empty()) return {};
    const FieldPtr &K = a[0].field;
    EPoly out(a.size() + b.size() - 1, K->zero());
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) out[i + j] = out[i + j] + a[i] * b[j];
    e_trim(out);
    return out;
}

std::pair<EPoly, EPoly> e_divrem(const EPoly &a, const EPoly &b) {
    int db = e_deg(b);
    if (db < 0) throw domain_error("e_divrem: division by zero polynomial");
    const FieldPtr &K = b[db].field;
    Element lcinv = inverse(b[db]);
    EPoly r = a;
    e_trim(r);
    int da = e_deg(r);
    if (da < db) return {EPoly{}, r};
    EPoly q((size_t)(da - db + 1), K->zero());
    while ((da = e_deg(r)) >= db) {
        Element c = r[da] * lcinv;
        q[da - db] = c;
        for (int i = 0; i <= db; i++) r[da - db + i] = r[da - db + i] - c * b[i];
        r[da] = K->zero();
        e_trim(r);
    }
    e_trim(q);
    return {q, r};
}

EPoly e_gcd(EPoly a, EPoly b) {
    e_trim(a);
    e_trim(b);
    while (e_deg(b) >= 0) {
        EPoly r = e_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    int da = e_deg(a);
    if (da < 0) return a;
    Element lcinv = inverse(a[da]);
    for (auto &c : a) c = c * lcinv;
    return a;
}

std::optional<Rat> rational_reconstruct(const Rat &x, const Rat &eps, const Int &den_bound) {
    auto close = [&](const Int &p, const Int &q) {
        Rat cand(p, q);
        cand.canonicalize();
        Rat diff = x - cand;
        if (diff < 0) diff = -diff;
        return diff <= eps;
    };
    Int p0(1), q0(0);
    Rat rem = x;
    Int a = fdiv(rem.get_num(), rem.get_den());
    Int p1 = a, q1(1);
    for (int iter = 0; iter < 20000; iter++) {
        if (q1 > den_bound) return std::nullopt;
        if (close(p1, q1)) {
            Rat out(p1, q1);
            out.canonicalize();
            return out;
        }
        Rat frac = rem - Rat(a);
        if (frac == 0) return std::nullopt; /* expansion ended short of eps */
        rem = Rat(1) / frac;
        a = fdiv(rem.get_num(), rem.get_den());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

namespace {

Rat inv_pow2(long e) { return Rat(Int(1), Int(1) << (unsigned long)e); }

QVec mat_vec(const QMat &m, const QVec &v) {
    QVec out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < v.size(); j++) out[i] += m[i][j] * v[j];
    return out;
}

bool elem_less(const Element &a, const Element &b) {
    for (size_t i = 0; i < a.pow.size(); i++) {
        if (a.pow[i] < b.pow[i]) return true;
        if (b.pow[i] < a.pow[i]) return false;
    }
    return false;
}

}  // namespace

std::vector<Element> roots_in_field_general(const FieldPtr &K, const EPoly &g0) {
    EPoly g = g0;
    e_trim(g);
    if (e_deg(g) < 0) throw domain_error("roots_in_field: zero polynomial");
    if (e_deg(g) == 0) return {};
    /* squarefree, monic part */
    EPoly h;
    {
        EPoly d = e_gcd(g, e_derivative(g));
        h = e_divrem(g, d).first;
        Element lcinv = inverse(h[e_deg(h)]);
        for (auto &c : h) c = c * lcinv;
    }
    int m = e_deg(h);
    size_t d = K->degree;
    if (m == 1) return {-h[0]};

    std::vector<Element> found;
    auto record = [&](const Element &x) {
        for (const Element &y : found)
            if (y == x) return;
        found.push_back(x);
    };

    for (long prec : {192L, 384L, 768L, 1536L, 3072L}) {
        RootSet rs = isolate_roots(K->poly, prec);

        /* numeric roots of the embedded polynomial, per embedding */
        std::vector<std::vector<QC>> W(d);
        for (size_t j = 0; j < d; j++) {
            std::vector<QC> ec;
            for (int t = 0; t <= m; t++) ec.push_back(qc_eval(h[t].pow, rs.roots[j].center));
            W[j] = approx_complex_roots(ec, prec);
        }

        /* realified Vandermonde of the embeddings; unknowns x_k + i y_k laid
         * out as [x_0..x_{d-1}, y_0..y_{d-1}] */
        QMat A(2 * d, QVec(2 * d, Rat(0)));
        for (size_t j = 0; j < d; j++) {
            QC pw{Rat(1), Rat(0)};
            for (size_t k = 0; k < d; k++) {
                A[2 * j][k] = pw.re;
                A[2 * j][d + k] = -pw.im;
                A[2 * j + 1][k] = pw.im;
                A[2 * j + 1][d + k] = pw.re;
                pw = qc_mul(pw, rs.roots[j].center);
            }
        }
        auto Ainv = q_inverse(A);
        if (!Ainv) continue;

        /* conjugation-consistent assignments: one free choice per real
         * embedding (near-real numeric roots only) and per conjugate pair */
        Rat real_tol = inv_pow2(prec / 4);
        struct Slot {
            size_t j;
            size_t jc;  // == j for real embeddings
            std::vector<size_t> choices;
        };
        std::vector<Slot> slots;
        bool viable = true;
        for (size_t j = 0; j < d && viable; j++) {
            if (rs.conj[j] == j) {
                Slot s{j, j, {}};
                for (size_t t = 0; t < W[j].size(); t++) {
                    Rat im = W[j][t].im < 0 ? Rat(-W[j][t].im) : W[j][t].im;
                    if (im <= real_tol) s.choices.push_back(t);
                }
                if (s.choices.empty()) viable = false;
                slots.push_back(std::move(s));
            } else if (rs.conj[j] > j) {
                Slot s{j, rs.conj[j], {}};
                for (size_t t = 0; t < W[j].size(); t++) s.choices.push_back(t);
                slots.push_back(std::move(s));
            }
        }
        if (!viable) continue;

        Int total(1);
        for (const Slot &s : slots) total *= (long)s.choices.size();
        if (total > 500000) throw resource_error("roots_in_field: search space too large");

        Rat eps = inv_pow2(prec / 3);
        Int den_bound = Int(1) << (unsigned long)(prec / 4);
        Rat imag_tol = inv_pow2(prec / 8);

        std::vector<size_t> counter(slots.size(), 0);
        bool done = slots.empty();
        while (!done) {
            QVec b(2 * d, Rat(0));
            for (size_t s = 0; s < slots.size(); s++) {
                const QC &w = W[slots[s].j][slots[s].choices[counter[s]]];
                b[2 * slots[s].j] = w.re;
                b[2 * slots[s].j + 1] = w.im;
                if (slots[s].jc != slots[s].j) {
                    b[2 * slots[s].jc] = w.re;
                    b[2 * slots[s].jc + 1] = -w.im;
                }
            }
            QVec c = mat_vec(*Ainv, b);
            bool cand = true;
            for (size_t k = 0; k < d && cand; k++) {
                Rat im = c[d + k] < 0 ? Rat(-c[d + k]) : c[d + k];
                if (im > imag_tol) cand = false;
            }
            if (cand) {
                QVec coords(d);
                for (size_t k = 0; k < d && cand; k++) {
                    auto r = rational_reconstruct(c[k], eps, den_bound);
                    if (!r)
                        cand = false;
                    else
                        coords[k] = *r;
                }
                if (cand) {
                    Element x = K->from_pow(coords);
                    if (e_eval(h, x).is_zero()) record(x);
                }
            }
            /* next assignment */
            size_t s = 0;
            while (s < slots.size()) {
                if (++counter[s] < slots[s].choices.size()) break;
                counter[s] = 0;
                s++;
            }
            if (s == slots.size()) done = true;
        }
        if ((int)found.size() == m) break;
    }
    std::sort(found.begin(), found.end(), elem_less);
    return found;
}

std::vector<Element> roots_in_field(const FieldPtr &K, const QPoly &g) {
    return roots_in_field_general(K, e_from_q(K, g));
}

Automorphism make_automorphism(const Element &image) {
    const FieldPtr &K = image.field;
    size_t d = K->degree;
    if (!e_eval(e_from_q(K, q_poly(K->poly)), image).is_zero())
        throw domain_error("make_automorphism: image is not a root of the defining polynomial");
    Automorphism tau;
    tau.image = image;
    tau.matrix.assign(d, QVec(d, Rat(0)));
    Element pw = K->one();
    for (size_t k = 0; k < d; k++) {
        tau.matrix[k] = pw.pow;
        pw = pw * image;
    }
    return tau;
}

Element apply_automorphism(const Automorphism &tau, const Element &a) {
    const FieldPtr &K = a.field;
    QVec out(K->degree, Rat(0));
    for (size_t k = 0; k < K->degree; k++)
        for (size_t j = 0; j < K->degree; j++) out[j] += a.pow[k] * tau.matrix[k][j];
    return K->from_pow(out);
}

Automorphism compose(const Automorphism &a, const Automorphism &b) {
    return make_automorphism(apply_automorphism(a, b.image));
}

bool automorphism_is_identity(const Automorphism &tau) {
    return tau.image == tau.image.field->theta();
}

int automorphism_order(const Automorphism &tau) {
    Automorphism cur = tau;
    for (int n = 1; n <= 64; n++) {
        if (automorphism_is_identity(cur)) return n;
        cur = compose(tau, cur);
    }
    throw domain_error("automorphism_order: order exceeds bound");
}

std::vector<Automorphism> automorphisms(const FieldPtr &K) {
    std::vector<Element> images = roots_in_field(K, q_poly(K->poly));
    /* close under composition; compositions are exact, so this also repairs
     * any root the numeric search may have missed */
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = images.size();
        for (size_t i = 0; i < n && !grew; i++)
            for (size_t j = 0; j < n && !grew; j++) {
                Automorphism t = make_automorphism(images[i]);
                Element comp = apply_automorphism(t, images[j]);
                bool known = false;
                for (const Element &x : images)
                    if (x == comp) known = true;
                if (!known) {
                    images.push_back(comp);
                    grew = true;
                }
            }
    }
    std::sort(images.begin(), images.end(), elem_less);
    std::vector<Automorphism> out;
    Element th = K->theta();
    for (const Element &x : images)
        if (x == th) out.push_back(make_automorphism(x));
    for (const Element &x : images)
        if (!(x == th)) out.push_back(make_automorphism(x));
    return out;
}

std::vector<size_t> root_permutation(const ZPoly &f, const QPoly &g) {
    size_t n = (size_t)z_deg(f);
    bool excluded_everywhere = false;
    for (long prec : {64L, 128L, 256L, 512L, 1024L, 2048L}) {
        RootSet rs = isolate_roots(f, prec);
        std::vector<size_t> pi(n, SIZE_MAX);
        bool ok = true;
        excluded_everywhere = false;
        for (size_t j = 0; j < n && ok; j++) {
            QCInterval v = eval_at_root(rs, g, j);
            size_t hit = SIZE_MAX;
            int cnt = 0;
            for (size_t mth = 0; mth < n; mth++) {
                Rat lo = sqrt_lower(qc_abs2(qc_sub(v.value, rs.roots[mth].center)));
                if (lo <= v.err + rs.roots[mth].radius) {
                    hit = mth;
                    cnt++;
                }
            }
            if (cnt == 0) {
                excluded_everywhere = true;
                ok = false;
            } else if (cnt > 1) {
                ok = false;
            } else {
                pi[j] = hit;
            }
        }
        if (!ok) {
            if (excluded_everywhere)
                throw domain_error("root_permutation: value is not a root of f");
            continue;
        }
        std::vector<bool> seen(n, false);
        for (size_t j = 0; j < n; j++) {
            if (seen[pi[j]]) throw domain_error("root_permutation: map is not injective");
            seen[pi[j]] = true;
        }
        return pi;
    }
    throw resource_error("root_permutation: could not certify within precision budget");
}

FieldEmbedding make_field_embedding(const FieldPtr &src, const Element &image) {
    const FieldPtr &dst = image.field;
    if (!e_eval(e_from_q(dst, q_poly(src->poly)), image).is_zero())
        throw domain_error("make_field_embedding: image is not a root of the source polynomial");
    FieldEmbedding e;
    e.src = src;
    e.dst = dst;
    e.image = image;
    e.pow_matrix.assign(src->degree, QVec(dst->degree, Rat(0)));
    Element pw = dst->one();
    for (size_t k = 0; k < src->degree; k++) {
        e.pow_matrix[k] = pw.pow;
        pw = pw * image;
    }
    return e;
}

std::vector<FieldEmbedding> embeddings_into(const FieldPtr &src, const FieldPtr &dst) {
    if (dst->degree % src->degree != 0) return {};
    std::vector<FieldEmbedding> out;
    for (const Element &r : roots_in_field(dst, q_poly(src->poly)))
        out.push_back(make_field_embedding(src, r));
    return out;
}

std::optional<FieldEmbedding> find_embedding(const FieldPtr &src, const FieldPtr &dst) {
    auto all = embeddings_into(src, dst);
    if (all.empty()) return std::nullopt;
    return all.front();
}

Element embed_element(const FieldEmbedding &e, const Element &a) {
    if (!same_field(a.field, e.src)) throw domain_error("embed_element: wrong source field");
    QVec out(e.dst->degree, Rat(0));
    for (size_t k = 0; k < e.src->degree; k++)
        for (size_t j = 0; j < e.dst->degree; j++) out[j] += a.pow[k] * e.pow_matrix[k][j];
    return e.dst->from_pow(out);
}

std::optional<Element> contract_element(const FieldEmbedding &e, const Element &b) {
    if (!same_field(b.field, e.dst)) throw domain_error("contract_element: wrong field");
    auto c = q_solve_left(e.pow_matrix, b.pow);
    if (!c) return std::nullopt;
    return e.src->from_pow(*c);
}

}  // namespace diodef
