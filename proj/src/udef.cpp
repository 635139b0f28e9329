#include "diodef/udef.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "diodef/errors.hpp"

namespace diodef {

std::string hybrid_status_name(HybridStatus s) {
    switch (s) {
        case HybridStatus::accepted: return "accepted";
        case HybridStatus::not_accepted: return "not_accepted";
        case HybridStatus::inconclusive: return "inconclusive";
    }
    throw std::logic_error("unknown hybrid status");
}

UDefinition emit_U(const FieldExtension &ext, const CurvePtr &curve, long digit_budget) {
    if (!curve) throw domain_error("emit_U requires a curve");
    if (!same_field(curve->field, ext.base))
        throw domain_error("the curve must be defined over the base field");
    if (!is_galois(ext.top))
        throw domain_error("the top field must be Galois; enlarge it before emitting");
    UDefinition U;
    U.ext = ext;
    U.curve = curve;
    U.params = compute_n((long)ext.top->degree);
    U.digit_budget = digit_budget;
    return U;
}

namespace {

std::optional<Rat> rat_value(const Element &a) {
    for (size_t i = 1; i < a.pow.size(); ++i)
        if (a.pow[i] != 0) return std::nullopt;
    return a.pow.empty() ? Rat(0) : a.pow[0];
}

std::optional<Int> rational_int_of(const Element &a) {
    auto q = rat_value(a);
    if (!q || q->get_den() != 1) return std::nullopt;
    return Int(q->get_num());
}

Int den_lcm(const Element &a) {
    Int d(1);
    for (const Rat &q : integral_coords(a)) {
        Int den(q.get_den());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    return d;
}

/* does the lemma apply at this scale?  scale-model parameters keep the
 * machinery runnable but forfeit the exactness of rejections */
bool lemma_scale(const UDefinition &U) {
    return params_valid(U.params) && U.params.ell == (long)U.ext.top->degree &&
           is_galois(U.ext.top);
}

Element alpha_product(const UDefinition &U, const Element &alpha) {
    const FieldPtr &L = U.ext.top;
    Element prod = L->one();
    for (long j = 1; j <= U.params.n; ++j) prod = prod * (alpha - L->from_rat(Rat(j)));
    return prod;
}

/* bounded family of lemma instances for a rejected alpha: the relative norm
 * of the product gives one modulus satisfying the divisibility hypothesis,
 * small rational ideals give the rest; every verdict must be
 * hypotheses_fail, anything else would contradict the lemma */
long refutation_scan(const UDefinition &U, const Element &alpha, const Element &beta_L) {
    const FieldPtr &L = U.ext.top;
    const FieldPtr &K = U.ext.base;
    Element theta_img = U.ext.emb.image;
    Element nrm = L->one();
    int fixers = 0;
    for (const auto &sig : embeddings_into(L, L)) {
        if (embed_element(sig, theta_img) == theta_img) {
            nrm = nrm * embed_element(sig, beta_L);
            ++fixers;
        }
    }
    if (fixers != U.ext.relative_degree)
        throw std::logic_error("u_check: automorphism count over the base is off");
    auto down = contract_element(U.ext.emb, nrm);
    if (!down || down->is_zero())
        throw std::logic_error("u_check: relative norm escaped the base field");
    std::vector<Ideal> mods{principal_ideal(*down)};
    for (long c : {2, 3, 5, 7}) mods.push_back(principal_ideal(K->from_rat(Rat(c))));
    long count = 0;
    for (const Ideal &I : mods) {
        for (long kv = 0; kv <= 4; ++kv) {
            ForcingInstance inst{U.ext, alpha, I, K->from_rat(Rat(kv)), U.params};
            if (forcing_conclusion(inst) != ForcingVerdict::hypotheses_fail)
                throw std::logic_error("u_check: refutation scan contradicts the lemma");
            ++count;
        }
    }
    return count;
}

struct SFound {
    Element s;
    Ideal num_s, den_s;
};

/* s = t(iP)/t(jP) over small multiples; the first ratio whose numerator the
 * product divides wins */
std::optional<SFound> scan_small_ratios(const CurvePtr &E, const Ideal &beta_ideal) {
    constexpr int cap = 12;
    std::vector<std::optional<Element>> tv(cap + 1);
    Point acc = infinity_point();
    for (int m = 1; m <= cap; ++m) {
        acc = ec_add(E, acc, E->generator);
        if (!acc.infinity && !acc.y.is_zero()) {
            Element t = uniformizer_at(E, acc);
            if (!t.is_zero()) tv[m] = t;
        }
    }
    for (int i = 1; i <= cap; ++i) {
        if (!tv[i]) continue;
        for (int j = 1; j <= cap; ++j) {
            if (!tv[j]) continue;
            Element s = *tv[i] / *tv[j];
            auto [num, den] = num_den(s);
            if (ideal_divides(beta_ideal, num)) return SFound{s, num, den};
        }
    }
    return std::nullopt;
}

void require_verified(const PolySystem &sys, const Witness &w, const char *what) {
    if (!verify_witness(sys, w))
        throw std::logic_error(std::string("u_check: ") + what + " witness failed verification");
}

USeams build_seams(const UDefinition &U, const Element &alpha, const Element &beta_K,
                   const SFound &sf, const Element &k) {
    const FieldPtr &K = U.ext.base;
    const FieldPtr &L = U.ext.top;
    FieldExtension ringK = identity_extension(K);
    FieldExtension ringL = identity_extension(L);
    USeams sm;
    sm.s = sf.s;
    sm.k = k;
    sm.beta = beta_K;
    sm.num_s = sf.num_s;
    sm.den_s = sf.den_s;
    Ideal beta_ideal = principal_ideal(beta_K);
    sm.divides_sys = emit_predicate(PredicateKind::ideal_divides, ringK, {beta_ideal, sf.num_s});
    sm.divides_w = divides_witness(sm.divides_sys, beta_ideal, sf.num_s);
    require_verified(sm.divides_sys, sm.divides_w, "divisibility");
    {
        Int d = den_lcm(sf.s);
        Element b = K->from_rat(Rat(d));
        Element a = b * sf.s;
        sm.numext_sys = emit_predicate(PredicateKind::is_num, ringK, {sf.num_s, sf.den_s});
        sm.numext_w = ratio_witness(sm.numext_sys, a, b, sf.num_s, sf.den_s);
        require_verified(sm.numext_sys, sm.numext_w, "num extraction");
    }
    Ideal I_L = extend_ideal(sf.num_s, U.ext);
    Element k_L = embed_element(U.ext.emb, k);
    if (is_integral(k_L)) {
        PolySystem cg = emit_predicate(PredicateKind::congruence, ringL, {I_L});
        Witness w = congruence_witness(cg, alpha, k_L, I_L);
        require_verified(cg, w, "congruence");
        sm.cong_sys.push_back(std::move(cg));
        sm.cong_w.push_back(std::move(w));
    } else {
        /* alpha integral and k not, so b alpha - a is nonzero */
        Element diff = alpha - k_L;
        auto [cn, cd] = num_den(diff);
        sm.cong_num = cn;
        sm.cong_den = cd;
        Int d = den_lcm(k_L);
        Element b = L->from_rat(Rat(d));
        Element p = b * alpha - b * k_L;
        PolySystem nx = emit_predicate(PredicateKind::is_num, ringL, {cn, cd});
        Witness nw = ratio_witness(nx, p, b, cn, cd);
        require_verified(nx, nw, "congruence num extraction");
        sm.cong_sys.push_back(std::move(nx));
        sm.cong_w.push_back(std::move(nw));
        PolySystem dv = emit_predicate(PredicateKind::ideal_divides, ringL, {I_L, cn});
        Witness dw = divides_witness(dv, I_L, cn);
        require_verified(dv, dw, "congruence divisibility");
        sm.cong_sys.push_back(std::move(dv));
        sm.cong_w.push_back(std::move(dw));
    }
    return sm;
}

}  // namespace

UCheck u_check(const UDefinition &U, const Element &alpha) {
    const FieldPtr &L = U.ext.top;
    const FieldPtr &K = U.ext.base;
    if (!same_field(alpha.field, L)) throw domain_error("alpha must lie in the top field");
    if (!U.curve || !same_field(U.curve->field, K))
        throw domain_error("the definition needs a curve over the base field");
    if (U.params.n <= 0) throw domain_error("parameters must have n >= 1");
    UCheck out;
    if (!is_integral(alpha)) {
        out.status = HybridStatus::not_accepted;
        out.reason = "alpha is not an algebraic integer";
        return out;
    }
    for (long j = 1; j <= U.params.n; ++j) {
        if (alpha == L->from_rat(Rat(j))) {
            out.status = HybridStatus::accepted;
            out.trivial_branch = true;
            out.branch_j = j;
            out.reason = "alpha lies in the adjoined {1..n} branch";
            return out;
        }
    }
    Element beta_L = alpha_product(U, alpha);
    auto alpha_K = contract_element(U.ext.emb, alpha);
    if (!alpha_K) {
        if (lemma_scale(U)) {
            out.refutation_candidates = refutation_scan(U, alpha, beta_L);
            out.status = HybridStatus::not_accepted;
            out.reason = "alpha is outside O_K, which the congruence lemma excludes";
        } else {
            out.status = HybridStatus::inconclusive;
            out.reason = "scale-model parameters: exclusion needs the full lemma bound";
        }
        return out;
    }
    auto beta_down = contract_element(U.ext.emb, beta_L);
    if (!beta_down) throw std::logic_error("u_check: product escaped the base field");
    Element beta_K = *beta_down;
    Ideal beta_ideal = principal_ideal(beta_K);
    std::optional<Int> m = rational_int_of(*alpha_K);

    /* lemma-numerator oracle: s in S with (beta) | num(s) */
    std::optional<SFound> sf = scan_small_ratios(U.curve, beta_ideal);
    if (!sf && m) {
        try {
            NumeratorResult nr = numerator_witness(U.curve, beta_K, U.digit_budget);
            auto [num, den] = num_den(nr.s);
            sf = SFound{nr.s, num, den};
        } catch (const domain_error &e) {
            out.reason = std::string("numerator oracle: ") + e.what();
        } catch (const resource_error &e) {
            out.reason = std::string("numerator oracle: ") + e.what();
        }
    }
    if (!sf) {
        out.status = HybridStatus::inconclusive;
        if (out.reason.empty())
            out.reason = "no s with (alpha-1)...(alpha-n) | num(s) within the oracle's reach";
        return out;
    }

    /* weak-approximation oracle: k in S with alpha = k mod num(s) */
    std::optional<Element> k;
    if (congruent_mod(alpha, embed_element(U.ext.emb, sf->s), sf->num_s, U.ext)) k = sf->s;
    if (!k && m && *m != 0 && !sf->num_s.is_unit() && sf->num_s.norm() <= Int(1000000)) {
        try {
            ApproxResult ar = approximate(U.curve, *m, sf->num_s, U.digit_budget);
            k = ar.s;
        } catch (const domain_error &) {
        } catch (const resource_error &) {
        }
    }
    if (!k) {
        out.status = HybridStatus::inconclusive;
        out.reason = "no weak-approximation witness for the congruence within reach";
        return out;
    }

    out.seams = build_seams(U, alpha, beta_K, *sf, *k);
    if (lemma_scale(U)) {
        ForcingInstance inst{U.ext, alpha, sf->num_s, *k, U.params};
        if (!check_hypotheses(inst))
            throw std::logic_error("u_check: verified seams disagree with the hypotheses");
        if (forcing_conclusion(inst) != ForcingVerdict::alpha_in_base)
            throw std::logic_error("u_check: lemma instance did not place alpha in the base");
        out.instance = inst;
    }
    out.status = HybridStatus::accepted;
    out.reason = "certificates verified for both oracle conditions";
    return out;
}

OKDefinition emit_OK(const UDefinition &u) {
    OKDefinition def;
    def.u = u;
    const FieldPtr &K = u.ext.base;
    for (size_t i = 0; i < K->degree; ++i) {
        QVec e(K->degree, Rat(0));
        e[i] = 1;
        def.basis.push_back(K->from_integral(e));
    }
    return def;
}

OKCheck ok_check(const OKDefinition &def, const Element &gamma) {
    const UDefinition &U = def.u;
    const FieldPtr &L = U.ext.top;
    if (!same_field(gamma.field, L)) throw domain_error("gamma must lie in the top field");
    OKCheck out;
    if (!is_integral(gamma)) {
        out.status = HybridStatus::not_accepted;
        out.reason = "gamma is not an algebraic integer";
        return out;
    }
    auto g_K = contract_element(U.ext.emb, gamma);
    if (!g_K) {
        if (lemma_scale(U)) {
            out.status = HybridStatus::not_accepted;
            out.reason = "gamma is outside O_K and every summand U b_i lies in O_K";
        } else {
            out.status = HybridStatus::inconclusive;
            out.reason = "scale-model parameters: exclusion needs the full lemma bound";
        }
        return out;
    }
    /* integer coordinates are the canonical decomposition: Z sits inside U */
    for (const Rat &q : integral_coords(*g_K)) {
        if (q.get_den() != 1) throw std::logic_error("ok_check: integral element with fractional coordinates");
        out.coords.push_back(Int(q.get_num()));
    }
    bool all_ok = true;
    long first_open = -1;
    for (size_t i = 0; i < out.coords.size(); ++i) {
        UCheck comp = u_check(U, L->from_rat(Rat(out.coords[i])));
        if (comp.status != HybridStatus::accepted && all_ok) {
            all_ok = false;
            first_open = (long)i;
        }
        out.components.push_back(std::move(comp));
    }
    if (all_ok) {
        out.status = HybridStatus::accepted;
        out.reason = "every coordinate certified in U";
    } else {
        out.status = HybridStatus::inconclusive;
        out.reason = "coordinate " + std::to_string(first_open) + " not certified: " +
                     out.components[first_open].reason;
    }
    return out;
}

/* ---- coset membership in the weighted chart ---- */

namespace {

struct SysB {
    PolySystem sys;
    FieldPtr T;
    std::map<std::string, size_t> idx;

    SysB(const FieldExtension &ring, std::vector<std::string> params,
         std::vector<std::string> exis) {
        sys.ring = ring;
        sys.parameters = std::move(params);
        sys.existentials = std::move(exis);
        T = ring.top;
        auto all = sys.variables();
        for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = i;
    }
    MultiPoly v(const std::string &name) const {
        auto it = idx.find(name);
        if (it == idx.end()) throw std::logic_error("coset chart: unknown variable " + name);
        return mp_scale(T->one(), mp_var(it->second, idx.size()));
    }
    MultiPoly c(const Element &e) const { return mp_const(e, idx.size()); }
    void eq(MultiPoly p) { sys.equations.push_back(std::move(p)); }
    MultiPoly sc(long k, const MultiPoly &p) const { return mp_scale(T->from_rat(Rat(k)), p); }
};

MultiPoly mpow(const MultiPoly &p, int k) {
    MultiPoly out = p;
    for (int i = 1; i < k; ++i) out = mp_mul(out, p);
    return out;
}

/* (2x-1)(3x-1) = y * target */
void guard_eq(SysB &b, const std::string &gx, const std::string &gy, const MultiPoly &target) {
    MultiPoly x = b.v(gx), y = b.v(gy);
    MultiPoly one = b.c(b.T->one());
    MultiPoly lhs = mp_mul(mp_sub(b.sc(2, x), one), mp_sub(b.sc(3, x), one));
    b.eq(mp_sub(lhs, mp_mul(y, target)));
}

struct Tri {
    MultiPoly X, Y, W;
};

/* S = 4 X Y^2, M = 3 X^2 + A W^4; degeneracies surface downstream as W = 0 */
Tri dbl_step(SysB &b, const Tri &P, const Element &A) {
    MultiPoly S = b.v("dS"), M = b.v("dM");
    b.eq(mp_sub(S, b.sc(4, mp_mul(P.X, mpow(P.Y, 2)))));
    b.eq(mp_sub(M, mp_add(b.sc(3, mpow(P.X, 2)), mp_scale(A, mpow(P.W, 4)))));
    Tri o{b.v("X2"), b.v("Y2"), b.v("W2")};
    b.eq(mp_sub(o.X, mp_sub(mpow(M, 2), b.sc(2, S))));
    b.eq(mp_sub(o.Y, mp_sub(mp_mul(M, mp_sub(S, o.X)), b.sc(8, mpow(P.Y, 4)))));
    b.eq(mp_sub(o.W, b.sc(2, mp_mul(P.Y, P.W))));
    return o;
}

/* distinct-point addition with an H != 0 guard */
Tri add_step(SysB &b, const Tri &P1, const Tri &P2, const std::string &pf,
             const std::array<std::string, 3> &out_names) {
    MultiPoly U1 = b.v(pf + "U1"), U2 = b.v(pf + "U2");
    MultiPoly S1 = b.v(pf + "S1"), S2 = b.v(pf + "S2");
    MultiPoly H = b.v(pf + "H"), R = b.v(pf + "R");
    b.eq(mp_sub(U1, mp_mul(P1.X, mpow(P2.W, 2))));
    b.eq(mp_sub(U2, mp_mul(P2.X, mpow(P1.W, 2))));
    b.eq(mp_sub(S1, mp_mul(P1.Y, mpow(P2.W, 3))));
    b.eq(mp_sub(S2, mp_mul(P2.Y, mpow(P1.W, 3))));
    b.eq(mp_sub(H, mp_sub(U2, U1)));
    b.eq(mp_sub(R, mp_sub(S2, S1)));
    guard_eq(b, pf + "gx", pf + "gy", H);
    Tri o{b.v(out_names[0]), b.v(out_names[1]), b.v(out_names[2])};
    b.eq(mp_sub(o.X, mp_sub(mpow(R, 2), mp_add(mpow(H, 3), b.sc(2, mp_mul(U1, mpow(H, 2)))))));
    b.eq(mp_sub(o.Y, mp_sub(mp_mul(R, mp_sub(mp_mul(U1, mpow(H, 2)), o.X)),
                            mp_mul(S1, mpow(H, 3)))));
    b.eq(mp_sub(o.W, mp_mul(mp_mul(P1.W, P2.W), H)));
    return o;
}

/* integral (X, Y, W) with x = X/W^2, y = Y/W^3 */
std::array<Element, 3> jac_lift(const Point &P) {
    const FieldPtr &L = P.x.field;
    Int dx = den_lcm(P.x), dy = den_lcm(P.y), d;
    mpz_lcm(d.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    Element W = L->from_rat(Rat(d));
    return {P.x * W * W, P.y * W * W * W, W};
}

PolySystem rep_chart(const CosetData &data, size_t ri) {
    const CurvePtr &E = data.curve;
    const FieldPtr &L = E->field;
    const Point &rep = data.reps[ri];
    const int r = data.r;
    std::vector<std::string> exis = {"qgx", "qgy", "ZX", "ZY", "ZW", "zgx", "zgy"};
    if (r >= 2) for (const char *s : {"dS", "dM", "X2", "Y2", "W2"}) exis.emplace_back(s);
    for (int mstep = 3; mstep <= r; ++mstep) {
        std::string pf = "a" + std::to_string(mstep);
        for (const char *s : {"U1", "U2", "S1", "S2", "H", "R", "gx", "gy"})
            exis.push_back(pf + s);
        std::string ms = std::to_string(mstep);
        exis.push_back("X" + ms);
        exis.push_back("Y" + ms);
        exis.push_back("W" + ms);
    }
    if (!rep.infinity)
        for (const char *s : {"fU1", "fU2", "fS1", "fS2", "fH", "fR", "fgx", "fgy",
                              "XF", "YF", "WF"})
            exis.emplace_back(s);
    SysB b(identity_extension(L), {"QX", "QY", "QW"}, exis);
    guard_eq(b, "qgx", "qgy", b.v("QW"));
    guard_eq(b, "zgx", "zgy", b.v("ZW"));
    Tri Z{b.v("ZX"), b.v("ZY"), b.v("ZW")};
    /* Y^2 = X^3 + A X W^4 + B W^6 */
    b.eq(mp_sub(mpow(Z.Y, 2), mp_add(mpow(Z.X, 3),
                                     mp_add(mp_scale(E->A, mp_mul(Z.X, mpow(Z.W, 4))),
                                            mp_scale(E->B, mpow(Z.W, 6))))));
    Tri cur = Z;
    if (r >= 2) cur = dbl_step(b, Z, E->A);
    for (int mstep = 3; mstep <= r; ++mstep) {
        std::string ms = std::to_string(mstep);
        cur = add_step(b, cur, Z, "a" + ms, {"X" + ms, "Y" + ms, "W" + ms});
    }
    if (!rep.infinity) {
        auto [RX, RY, RW] = jac_lift(rep);
        Tri repT{b.c(RX), b.c(RY), b.c(RW)};
        cur = add_step(b, cur, repT, "f", {"XF", "YF", "WF"});
    }
    b.eq(mp_sub(mp_mul(b.v("QX"), mpow(cur.W, 2)), mp_mul(cur.X, mpow(b.v("QW"), 2))));
    b.eq(mp_sub(mp_mul(b.v("QY"), mpow(cur.W, 3)), mp_mul(cur.Y, mpow(b.v("QW"), 3))));
    b.sys.label = "coset_rep" + std::to_string(ri);
    return b.sys;
}

}  // namespace

CosetEmission emit_coset_membership(const CosetData &data) {
    if (!data.curve) throw domain_error("coset emission requires a curve");
    if (data.r < 1 || data.r > 5) throw domain_error("r must be between 1 and 5");
    if (data.reps.empty()) throw domain_error("at least one coset representative is required");
    if (!is_integral(data.curve->A) || !is_integral(data.curve->B))
        throw domain_error("chart constants need integral curve coefficients");
    for (const Point &rep : data.reps)
        if (!rep.infinity && !on_curve(data.curve, rep))
            throw domain_error("representative is not on the curve");
    CosetEmission em;
    em.data = data;
    for (size_t i = 0; i < data.reps.size(); ++i) em.per_rep.push_back(rep_chart(data, i));
    em.sys = em.per_rep.size() == 1 ? em.per_rep[0]
                                    : combine(em.per_rep, CombineMode::set_union);
    em.sys.label = "coset_union";
    em.notes = {
        "affine chart: the identity is excluded as a query point",
        "chains with 2Z = +-Z, (m-1)Z = +-Z, or rZ = +-rep fall outside the H != 0 guards",
        "an infinite representative contributes the direct r-multiple chart",
    };
    return em;
}

namespace {

struct VTri {
    Element X, Y, W;
};

void set_guard(Witness &w, const std::string &gx, const std::string &gy, const Element &target) {
    auto [x, y] = nonzero_witness(target);
    w[gx] = x;
    w[gy] = y;
}

VTri dbl_vals(Witness &w, const VTri &P, const Element &A) {
    const FieldPtr &L = P.X.field;
    Element four = L->from_rat(Rat(4)), three = L->from_rat(Rat(3));
    Element two = L->from_rat(Rat(2)), eight = L->from_rat(Rat(8));
    Element S = four * P.X * P.Y * P.Y;
    Element M = three * P.X * P.X + A * P.W * P.W * P.W * P.W;
    VTri o;
    o.X = M * M - two * S;
    o.Y = M * (S - o.X) - eight * P.Y * P.Y * P.Y * P.Y;
    o.W = two * P.Y * P.W;
    w["dS"] = S;
    w["dM"] = M;
    w["X2"] = o.X;
    w["Y2"] = o.Y;
    w["W2"] = o.W;
    return o;
}

VTri add_vals(Witness &w, const VTri &P1, const VTri &P2, const std::string &pf,
              const std::array<std::string, 3> &out_names) {
    const FieldPtr &L = P1.X.field;
    Element two = L->from_rat(Rat(2));
    Element U1 = P1.X * P2.W * P2.W;
    Element U2 = P2.X * P1.W * P1.W;
    Element S1 = P1.Y * P2.W * P2.W * P2.W;
    Element S2 = P2.Y * P1.W * P1.W * P1.W;
    Element H = U2 - U1;
    Element R = S2 - S1;
    if (H.is_zero()) throw domain_error("coset witness hits a chart degeneracy");
    w[pf + "U1"] = U1;
    w[pf + "U2"] = U2;
    w[pf + "S1"] = S1;
    w[pf + "S2"] = S2;
    w[pf + "H"] = H;
    w[pf + "R"] = R;
    set_guard(w, pf + "gx", pf + "gy", H);
    VTri o;
    o.X = R * R - H * H * H - two * U1 * H * H;
    o.Y = R * (U1 * H * H - o.X) - S1 * H * H * H;
    o.W = P1.W * P2.W * H;
    w[out_names[0]] = o.X;
    w[out_names[1]] = o.Y;
    w[out_names[2]] = o.W;
    return o;
}

}  // namespace

Witness coset_witness(const CosetEmission &em, size_t rep_index, const Point &Q,
                      const Point &Z) {
    const CurvePtr &E = em.data.curve;
    if (rep_index >= em.data.reps.size()) throw domain_error("representative index out of range");
    if (Q.infinity || Z.infinity) throw domain_error("the chart covers affine points only");
    if (!on_curve(E, Q) || !on_curve(E, Z)) throw domain_error("points must lie on the curve");
    const Point &rep = em.data.reps[rep_index];
    Point rz = ec_mul(E, Int(em.data.r), Z);
    Point total = rep.infinity ? rz : ec_add(E, rz, rep);
    if (!points_equal(total, Q)) throw domain_error("Q is not rep + r Z");
    Witness w;
    auto [QX, QY, QW] = jac_lift(Q);
    w["QX"] = QX;
    w["QY"] = QY;
    w["QW"] = QW;
    set_guard(w, "qgx", "qgy", QW);
    auto [ZX, ZY, ZW] = jac_lift(Z);
    VTri zt{ZX, ZY, ZW};
    w["ZX"] = ZX;
    w["ZY"] = ZY;
    w["ZW"] = ZW;
    set_guard(w, "zgx", "zgy", ZW);
    VTri cur = zt;
    if (em.data.r >= 2) cur = dbl_vals(w, zt, E->A);
    for (int mstep = 3; mstep <= em.data.r; ++mstep) {
        std::string ms = std::to_string(mstep);
        cur = add_vals(w, cur, zt, "a" + ms, {"X" + ms, "Y" + ms, "W" + ms});
    }
    if (!rep.infinity) {
        auto [RX, RY, RW] = jac_lift(rep);
        cur = add_vals(w, cur, VTri{RX, RY, RW}, "f", {"XF", "YF", "WF"});
    }
    if (!verify_witness(em.per_rep[rep_index], w))
        throw std::logic_error("coset witness failed verification");
    return w;
}

}  // namespace diodef
