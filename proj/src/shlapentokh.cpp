#include "diodef/shlapentokh.hpp"

#include <algorithm>

#include "diodef/errors.hpp"

namespace diodef {

namespace {

bool is_galois(const FieldPtr &F, std::vector<Automorphism> &auts) {
    auts = automorphisms(F);
    return auts.size() == F->degree;
}

std::string poly_string(const ZPoly &p) {
    std::string s;
    for (int k = z_deg(p); k >= 0; k--) {
        const Int &c = p[(size_t)k];
        if (c == 0 && z_deg(p) > 0) continue;
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = abs(c);
        if (a != 1 || k == 0) s += a.get_str();
        if (k > 0) s += a == 1 ? "x" : "*x";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

QPoly image_poly(const Automorphism &tau) {
    QPoly g(tau.image.pow.begin(), tau.image.pow.end());
    q_trim(g);
    return g;
}

/* primitive integer vector spanning the same line */
IVec integerize(const QVec &v) {
    Int l = 1;
    for (const Rat &x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); i++) {
        Rat s = Rat(l) * v[i];
        w[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g > 1)
        for (Int &x : w) x /= g;
    return w;
}

/* divide an algebraic integer by the content of its integral coordinates */
Element content_reduce(const Element &x) {
    QVec c = integral_coords(x);
    Int g = 0;
    for (const Rat &q : c) {
        if (q.get_den() != 1) return x;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (g <= 1) return x;
    return Rat(1, g) * x;
}

ZPoly integral_min_poly(const Element &x) {
    QPoly h = min_poly(x);
    ZPoly z(h.size());
    for (size_t i = 0; i < h.size(); i++) {
        if (h[i].get_den() != 1)
            throw std::logic_error("minimal polynomial of an integral element not integral");
        z[i] = h[i].get_num();
    }
    return z;
}

/* Present the Q-subspace spanned by the given power-coordinate rows as a
 * subfield: find an integral primitive element among small integer
 * combinations of the rows, widening the search box until the minimal
 * polynomial both has the right degree and names a constructible field. */
SubfieldPresentation present_subspace(const FieldPtr &F, const QMat &rows) {
    size_t m = q_rank(rows);
    if (rows.empty() || m == 0) throw std::logic_error("subspace presentation of dimension 0");
    SubfieldPresentation out;
    if (m == 1) {
        /* the subspace contains 1, so it is Q itself */
        out.field = field_by_name("rat");
        out.primitive_in_F = F->one();
        out.minpoly = {-1, 1};
        out.emb = make_field_embedding(out.field, out.primitive_in_F);
        return out;
    }
    std::vector<IVec> gens;
    for (const QVec &r : rows) gens.push_back(integerize(r));
    size_t k = gens.size();
    std::string first_error;
    for (long radius = 1; radius <= 64; radius++) {
        std::vector<long> c(k, -radius);
        while (true) {
            long mx = 0;
            for (long ci : c) mx = std::max(mx, std::abs(ci));
            if (mx == radius) { /* skip interior points already visited */
                QVec v(F->degree, Rat(0));
                for (size_t i = 0; i < k; i++)
                    for (size_t j = 0; j < F->degree; j++) v[j] += Rat(c[i]) * Rat(gens[i][j]);
                Element x = content_reduce(F->from_pow(v));
                if (!x.is_zero() && (size_t)q_deg(min_poly(x)) == m) {
                    try {
                        ZPoly h = integral_min_poly(x);
                        out.field = make_field(h);
                        out.primitive_in_F = x;
                        out.minpoly = h;
                        out.emb = make_field_embedding(out.field, x);
                        return out;
                    } catch (const domain_error &e) {
                        /* no catalogue basis for this generator; keep looking */
                        if (first_error.empty()) first_error = e.what();
                    }
                }
            }
            size_t i = 0;
            while (i < k && c[i] == radius) c[i++] = -radius;
            if (i == k) break;
            c[i]++;
        }
    }
    throw domain_error("no constructible primitive element found for the subfield" +
                       (first_error.empty() ? std::string() : ": " + first_error));
}

QMat fixed_subspace(const Automorphism &sigma) {
    const FieldPtr &F = sigma.image.field;
    size_t d = F->degree;
    QMat m = sigma.matrix;
    for (size_t i = 0; i < d; i++) m[i][i] -= 1;
    return q_kernel_left(m);
}

}  // namespace

std::vector<Automorphism> complex_conjugations(const FieldPtr &F) {
    std::vector<Automorphism> auts;
    if (!is_galois(F, auts))
        throw domain_error("field is not Galois over Q; enlarge to the Galois closure first");
    RootSet rs = isolate_roots(F->poly);
    std::vector<std::vector<size_t>> perms;
    for (const Automorphism &tau : auts) perms.push_back(root_permutation(F->poly, image_poly(tau)));
    std::vector<Automorphism> out;
    for (size_t i = 0; i < rs.roots.size(); i++) {
        if (rs.roots[i].real) continue;
        /* the automorphism acting as conjugation in the i-th embedding */
        size_t hit = auts.size();
        for (size_t t = 0; t < auts.size(); t++) {
            if (perms[t][i] == rs.conj[i]) {
                hit = t;
                break;
            }
        }
        if (hit == auts.size())
            throw std::logic_error("no automorphism matches conjugation in a nonreal embedding");
        if (automorphism_order(auts[hit]) != 2)
            throw std::logic_error("matched conjugation does not have order 2");
        bool seen = false;
        for (const Automorphism &s : out) seen = seen || s.image == auts[hit].image;
        if (!seen) out.push_back(auts[hit]);
    }
    return out;
}

SubfieldPresentation fixed_field(const Automorphism &sigma) {
    if (automorphism_order(sigma) != 2) throw domain_error("fixed_field needs an order-2 automorphism");
    const FieldPtr &F = sigma.image.field;
    SubfieldPresentation out = present_subspace(F, fixed_subspace(sigma));
    if (out.field->degree * 2 != F->degree)
        throw std::logic_error("fixed field of an involution does not have index 2");
    if (apply_automorphism(sigma, out.primitive_in_F) != out.primitive_in_F)
        throw std::logic_error("primitive element of the fixed field moves under sigma");
    return out;
}

SubfieldPresentation intersect_subfields(const FieldPtr &F,
                                         const std::vector<SubfieldPresentation> &parts) {
    for (const SubfieldPresentation &p : parts)
        if (!same_field(p.emb.dst, F)) throw domain_error("subfield of a different ambient field");
    if (parts.empty()) {
        SubfieldPresentation out;
        out.field = F;
        out.primitive_in_F = F->theta();
        out.minpoly = F->poly;
        out.emb = make_field_embedding(F, F->theta());
        return out;
    }
    QMat space = parts[0].emb.pow_matrix;
    for (size_t i = 1; i < parts.size(); i++) {
        /* kernel combinations of stacked generators span the intersection */
        const QMat &other = parts[i].emb.pow_matrix;
        QMat stacked = space;
        stacked.insert(stacked.end(), other.begin(), other.end());
        QMat ker = q_kernel_left(stacked);
        QMat next;
        for (const QVec &kv : ker) {
            QVec v(F->degree, Rat(0));
            for (size_t r = 0; r < space.size(); r++)
                for (size_t j = 0; j < F->degree; j++) v[j] += kv[r] * space[r][j];
            next.push_back(v);
        }
        space = next;
    }
    SubfieldPresentation out = present_subspace(F, space);
    for (const SubfieldPresentation &p : parts) {
        /* exact containment: the primitive element lies in each part */
        QMat lat = p.emb.pow_matrix;
        if (!q_solve_left(lat, out.primitive_in_F.pow))
            throw std::logic_error("intersection primitive element escapes a constituent");
    }
    return out;
}

bool is_totally_real(const FieldPtr &K) { return isolate_roots(K->poly).r2 == 0; }

ReductionPlan plan(const FieldPtr &F) {
    ReductionPlan P;
    P.field = F;
    P.conjugations = complex_conjugations(F);
    for (const Automorphism &s : P.conjugations) P.fixed_fields.push_back(fixed_field(s));
    P.intersection = intersect_subfields(F, P.fixed_fields);
    const SubfieldPresentation &E = P.intersection;
    if (!is_totally_real(E.field))
        throw std::logic_error("intersection of conjugation-fixed fields is not totally real");
    if (F->degree % E.field->degree != 0)
        throw std::logic_error("intersection degree does not divide the field degree");
    for (const Automorphism &s : P.conjugations)
        if (apply_automorphism(s, E.primitive_in_F) != E.primitive_in_F)
            throw std::logic_error("intersection is not fixed by every conjugation");

    ReductionStep base;
    base.kind = "base";
    base.statement = "Z is diophantine in O_E for the totally real field E defined by " +
                     poly_string(E.minpoly);
    base.assumed = "totally real base (Denef)";
    P.steps.push_back(base);
    if (!P.conjugations.empty()) {
        ReductionStep inter;
        inter.kind = "intersection";
        inter.statement =
            "O_E is the intersection of the fixed rings O_{F^sigma}, and a finite "
            "intersection of diophantine subrings is diophantine";
        P.steps.push_back(inter);
    }
    for (size_t i = 0; i < P.conjugations.size(); i++) {
        ReductionStep q;
        q.kind = "quadratic";
        q.sigma_index = (int)i;
        q.statement = "O_{F^sigma} is diophantine in O_F for the index-2 fixed field defined by " +
                      poly_string(P.fixed_fields[i].minpoly);
        q.assumed = "degree-2 descent (rank stability input)";
        P.steps.push_back(q);
    }
    return P;
}

ReductionPlan plan_L0_variant(const FieldPtr &F) {
    ReductionPlan P = plan(F);
    P.l0_variant = true;
    static const long l0_d[] = {-1, 5, 7, 11, 13, 17, 19};
    for (ReductionStep &st : P.steps) {
        if (st.kind != "quadratic") continue;
        const SubfieldPresentation &K = P.fixed_fields[(size_t)st.sigma_index];
        st.conditions = {"the base field embeds in R", "the top field is Galois over Q",
                         "the top field contains sqrt(d) for d in {-1,5,7,11,13,17,19}"};
        if (isolate_roots(K.field->poly).r1 == 0)
            st.violations.push_back("the base field has no real embedding");
        /* top-field Galois holds by construction of the plan */
        for (long d : l0_d) {
            QPoly g = {Rat(-d), Rat(0), Rat(1)};
            if (roots_in_field(F, g).empty())
                st.violations.push_back("the top field omits sqrt(" + std::to_string(d) + ")");
        }
    }
    return P;
}

}  // namespace diodef
