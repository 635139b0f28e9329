#include "diodef/polysys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "diodef/errors.hpp"

namespace diodef {

bool MonoLess::operator()(const std::vector<int> &a, const std::vector<int> &b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    /* higher power of an earlier variable = later in the map = "larger";
     * iteration order is then degree-then-lex ascending */
}

MultiPoly mp_const(const Element &c, size_t nvars) {
    MultiPoly p;
    if (!c.is_zero()) p.terms.emplace(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly mp_var(size_t idx, size_t nvars) {
    if (idx >= nvars) throw std::logic_error("mp_var: index out of range");
    MultiPoly p;
    std::vector<int> e(nvars, 0);
    e[idx] = 1;
    /* coefficient field filled on first arithmetic with a constant */
    p.terms.emplace(std::move(e), Element());
    return p;
}

namespace {

/* variable monomials carry a placeholder coefficient until combined */
Element coeff_or_one(const Element &c, const FieldPtr &K) {
    if (c.field) return c;
    return K->from_rat(1);
}

FieldPtr poly_field(const MultiPoly &a, const MultiPoly &b) {
    for (const auto &t : a.terms)
        if (t.second.field) return t.second.field;
    for (const auto &t : b.terms)
        if (t.second.field) return t.second.field;
    return nullptr;
}

void add_term(MultiPoly &p, const std::vector<int> &e, const Element &c) {
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        if (!c.is_zero()) p.terms.emplace(e, c);
        return;
    }
    Element s = it->second + c;
    if (s.is_zero())
        p.terms.erase(it);
    else
        it->second = s;
}

}  // namespace

MultiPoly mp_add(const MultiPoly &a, const MultiPoly &b) {
    FieldPtr K = poly_field(a, b);
    if (!K) throw std::logic_error("mp_add: no coefficient field");
    MultiPoly r;
    for (const auto &t : a.terms) add_term(r, t.first, coeff_or_one(t.second, K));
    for (const auto &t : b.terms) add_term(r, t.first, coeff_or_one(t.second, K));
    return r;
}

MultiPoly mp_neg(const MultiPoly &a) {
    MultiPoly r;
    for (const auto &t : a.terms) {
        if (!t.second.field) throw std::logic_error("mp_neg: bare monomial");
        r.terms.emplace(t.first, -t.second);
    }
    return r;
}

MultiPoly mp_sub(const MultiPoly &a, const MultiPoly &b) {
    FieldPtr K = poly_field(a, b);
    if (!K) throw std::logic_error("mp_sub: no coefficient field");
    MultiPoly r;
    for (const auto &t : a.terms) add_term(r, t.first, coeff_or_one(t.second, K));
    for (const auto &t : b.terms) add_term(r, t.first, -coeff_or_one(t.second, K));
    return r;
}

MultiPoly mp_mul(const MultiPoly &a, const MultiPoly &b) {
    FieldPtr K = poly_field(a, b);
    if (!K) throw std::logic_error("mp_mul: no coefficient field");
    MultiPoly r;
    for (const auto &ta : a.terms)
        for (const auto &tb : b.terms) {
            std::vector<int> e = ta.first;
            for (size_t i = 0; i < e.size(); ++i) e[i] += tb.first[i];
            add_term(r, e, coeff_or_one(ta.second, K) * coeff_or_one(tb.second, K));
        }
    return r;
}

MultiPoly mp_scale(const Element &c, const MultiPoly &a) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto &t : a.terms) r.terms.emplace(t.first, c * coeff_or_one(t.second, c.field));
    return r;
}

Element mp_eval(const MultiPoly &p, const std::vector<Element> &vals, const FieldPtr &K) {
    Element acc = K->from_rat(0);
    for (const auto &t : p.terms) {
        Element term = coeff_or_one(t.second, K);
        for (size_t i = 0; i < t.first.size(); ++i)
            for (int k = 0; k < t.first[i]; ++k) term = term * vals[i];
        acc = acc + term;
    }
    return acc;
}

std::vector<size_t> mp_support(const MultiPoly &p) {
    std::set<size_t> s;
    for (const auto &t : p.terms)
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] > 0) s.insert(i);
    return {s.begin(), s.end()};
}

std::vector<std::string> PolySystem::variables() const {
    std::vector<std::string> v = parameters;
    v.insert(v.end(), existentials.begin(), existentials.end());
    return v;
}

FieldExtension identity_extension(const FieldPtr &K) {
    size_t d = K->degree;
    QVec theta(d, Rat(0));
    if (d == 1)
        theta[0] = 1; /* the degree-1 defining root */
    else
        theta[1] = 1;
    return make_extension(make_field_embedding(K, K->from_pow(theta)));
}

namespace {

struct Builder {
    PolySystem sys;
    FieldPtr T;

    Builder(const FieldExtension &ring, std::vector<std::string> params,
            std::vector<std::string> exis) {
        sys.ring = ring;
        sys.parameters = std::move(params);
        sys.existentials = std::move(exis);
        T = ring.top;
    }
    size_t n() const { return sys.nvars(); }
    MultiPoly v(const std::string &name) const {
        auto vars = sys.variables();
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return mp_scale(T->from_rat(1), mp_var(i, vars.size()));
        throw std::logic_error("Builder: unknown variable " + name);
    }
    MultiPoly c(const Element &e) const { return mp_const(e, n()); }
    MultiPoly c(long k) const { return mp_const(T->from_rat(Rat(k)), n()); }
    void eq(const MultiPoly &p) { sys.equations.push_back(p); }
};

std::pair<Element, Element> gens_of(const Ideal &I, const FieldPtr &T) {
    if (I.field != T) throw domain_error("ideal from a different ring");
    return two_element_rep(I);
}

/* (2x-1)(3x-1) - y a with the given variable names */
MultiPoly nonzero_poly(const Builder &b, const std::string &x, const std::string &y,
                       const MultiPoly &a) {
    MultiPoly X = b.v(x), Y = b.v(y);
    MultiPoly lhs = mp_mul(mp_sub(mp_scale(b.T->from_rat(2), X), b.c(1)),
                           mp_sub(mp_scale(b.T->from_rat(3), X), b.c(1)));
    return mp_sub(lhs, mp_mul(Y, a));
}

}  // namespace

PolySystem emit_nonzero(const FieldExtension &ring) {
    Builder b(ring, {"a"}, {"x", "y"});
    b.eq(nonzero_poly(b, "x", "y", b.v("a")));
    b.sys.label = "nonzero";
    return b.sys;
}

const std::vector<PredicateKind> &all_predicate_kinds() {
    static const std::vector<PredicateKind> k = {
        PredicateKind::ideal_membership, PredicateKind::ideal_divides,
        PredicateKind::ideal_equal,      PredicateKind::coprime,
        PredicateKind::principal_ratio,  PredicateKind::is_num,
        PredicateKind::congruence,
    };
    return k;
}

std::string predicate_kind_name(PredicateKind k) {
    switch (k) {
        case PredicateKind::ideal_membership: return "ideal_membership";
        case PredicateKind::ideal_divides: return "ideal_divides";
        case PredicateKind::ideal_equal: return "ideal_equal";
        case PredicateKind::coprime: return "coprime";
        case PredicateKind::principal_ratio: return "principal_ratio";
        case PredicateKind::is_num: return "is_num";
        case PredicateKind::congruence: return "congruence";
    }
    throw std::logic_error("predicate_kind_name");
}

PredicateKind predicate_kind_of(const std::string &name) {
    for (PredicateKind k : all_predicate_kinds())
        if (predicate_kind_name(k) == name) return k;
    throw usage_error("unknown predicate kind: " + name);
}

PolySystem emit_predicate(PredicateKind kind, const FieldExtension &ring,
                          const std::vector<Ideal> &ideals) {
    const FieldPtr &T = ring.top;
    auto need = [&](size_t k) {
        if (ideals.size() != k)
            throw domain_error(predicate_kind_name(kind) + " takes " + std::to_string(k) +
                               " ideal(s)");
    };
    switch (kind) {
        case PredicateKind::ideal_membership: {
            need(1);
            auto [i1, i2] = gens_of(ideals[0], T);
            Builder b(ring, {"a"}, {"x", "y"});
            b.eq(mp_sub(b.v("a"),
                        mp_add(mp_scale(i1, b.v("x")), mp_scale(i2, b.v("y")))));
            b.sys.label = "ideal_membership";
            return b.sys;
        }
        case PredicateKind::ideal_divides: {
            need(2);
            auto [i1, i2] = gens_of(ideals[0], T);
            auto [j1, j2] = gens_of(ideals[1], T);
            Builder b(ring, {}, {"x1", "y1", "x2", "y2"});
            b.eq(mp_sub(b.c(j1),
                        mp_add(mp_scale(i1, b.v("x1")), mp_scale(i2, b.v("y1")))));
            b.eq(mp_sub(b.c(j2),
                        mp_add(mp_scale(i1, b.v("x2")), mp_scale(i2, b.v("y2")))));
            b.sys.label = "ideal_divides";
            return b.sys;
        }
        case PredicateKind::ideal_equal: {
            need(2);
            auto [i1, i2] = gens_of(ideals[0], T);
            auto [j1, j2] = gens_of(ideals[1], T);
            Builder b(ring, {}, {"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"});
            b.eq(mp_sub(b.c(j1),
                        mp_add(mp_scale(i1, b.v("x1")), mp_scale(i2, b.v("y1")))));
            b.eq(mp_sub(b.c(j2),
                        mp_add(mp_scale(i1, b.v("x2")), mp_scale(i2, b.v("y2")))));
            b.eq(mp_sub(b.c(i1),
                        mp_add(mp_scale(j1, b.v("x3")), mp_scale(j2, b.v("y3")))));
            b.eq(mp_sub(b.c(i2),
                        mp_add(mp_scale(j1, b.v("x4")), mp_scale(j2, b.v("y4")))));
            b.sys.label = "ideal_equal";
            return b.sys;
        }
        case PredicateKind::coprime: {
            need(2);
            auto [i1, i2] = gens_of(ideals[0], T);
            auto [j1, j2] = gens_of(ideals[1], T);
            Builder b(ring, {}, {"x1", "y1", "x2", "y2"});
            MultiPoly lhs = mp_add(mp_add(mp_scale(i1, b.v("x1")), mp_scale(i2, b.v("y1"))),
                                   mp_add(mp_scale(j1, b.v("x2")), mp_scale(j2, b.v("y2"))));
            b.eq(mp_sub(lhs, b.c(1)));
            b.sys.label = "coprime";
            return b.sys;
        }
        case PredicateKind::principal_ratio:
        case PredicateKind::is_num: {
            need(2);
            auto [i1, i2] = gens_of(ideals[0], T);
            auto [j1, j2] = gens_of(ideals[1], T);
            std::vector<std::string> exis = {"x1", "y1", "x2", "y2", "x3",
                                             "y3", "x4", "y4", "xb", "yb"};
            if (kind == PredicateKind::is_num)
                for (const char *s : {"xc1", "yc1", "xc2", "yc2"}) exis.push_back(s);
            Builder b(ring, {"a", "b"}, exis);
            MultiPoly A = b.v("a"), B = b.v("b");
            /* a J = b I as ideals: generator memberships both ways */
            b.eq(mp_sub(mp_mul(A, b.c(j1)),
                        mp_add(mp_mul(b.v("x1"), mp_mul(B, b.c(i1))),
                               mp_mul(b.v("y1"), mp_mul(B, b.c(i2))))));
            b.eq(mp_sub(mp_mul(A, b.c(j2)),
                        mp_add(mp_mul(b.v("x2"), mp_mul(B, b.c(i1))),
                               mp_mul(b.v("y2"), mp_mul(B, b.c(i2))))));
            b.eq(mp_sub(mp_mul(B, b.c(i1)),
                        mp_add(mp_mul(b.v("x3"), mp_mul(A, b.c(j1))),
                               mp_mul(b.v("y3"), mp_mul(A, b.c(j2))))));
            b.eq(mp_sub(mp_mul(B, b.c(i2)),
                        mp_add(mp_mul(b.v("x4"), mp_mul(A, b.c(j1))),
                               mp_mul(b.v("y4"), mp_mul(A, b.c(j2))))));
            b.eq(nonzero_poly(b, "xb", "yb", B));
            if (kind == PredicateKind::is_num) {
                MultiPoly lhs =
                    mp_add(mp_add(mp_scale(i1, b.v("xc1")), mp_scale(i2, b.v("yc1"))),
                           mp_add(mp_scale(j1, b.v("xc2")), mp_scale(j2, b.v("yc2"))));
                b.eq(mp_sub(lhs, b.c(1)));
            }
            b.sys.label = predicate_kind_name(kind);
            return b.sys;
        }
        case PredicateKind::congruence: {
            need(1);
            auto [i1, i2] = gens_of(ideals[0], T);
            Builder b(ring, {"a", "b"}, {"x", "y"});
            b.eq(mp_sub(mp_sub(b.v("a"), b.v("b")),
                        mp_add(mp_scale(i1, b.v("x")), mp_scale(i2, b.v("y")))));
            b.sys.label = "congruence";
            return b.sys;
        }
    }
    throw std::logic_error("emit_predicate");
}

namespace {

bool same_ring(const FieldExtension &a, const FieldExtension &b) {
    return a.top == b.top && a.base == b.base;
}

std::string fresh_name(const std::string &want, const std::set<std::string> &taken) {
    if (!taken.count(want)) return want;
    for (int k = 2;; ++k) {
        std::string cand = want + "_" + std::to_string(k);
        if (!taken.count(cand)) return cand;
    }
}

/* re-index a polynomial into a larger variable space */
MultiPoly remap(const MultiPoly &p, const std::vector<size_t> &where, size_t nvars) {
    MultiPoly r;
    for (const auto &t : p.terms) {
        std::vector<int> e(nvars, 0);
        for (size_t i = 0; i < t.first.size(); ++i) e[where[i]] += t.first[i];
        r.terms.emplace(std::move(e), t.second);
    }
    return r;
}

struct Merged {
    PolySystem sys;
    std::vector<std::vector<MultiPoly>> branch_eqs;      // remapped equations
    std::vector<std::vector<std::string>> branch_params;  // possibly renamed
};

/* Shared parameter names refer to the same defined tuple; existentials are
 * renamed apart.  demote_params turns each branch's parameters into fresh
 * existentials (for set_sum). */
Merged merge_variables(const std::vector<PolySystem> &systems, bool demote_params) {
    Merged m;
    m.sys.ring = systems.front().ring;
    std::set<std::string> taken;
    std::vector<std::vector<size_t>> maps(systems.size());
    /* parameters first, preserving first-seen order */
    if (!demote_params) {
        for (const PolySystem &s : systems)
            for (const std::string &p : s.parameters)
                if (!taken.count(p)) {
                    taken.insert(p);
                    m.sys.parameters.push_back(p);
                }
    }
    for (size_t bi = 0; bi < systems.size(); ++bi) {
        const PolySystem &s = systems[bi];
        auto vars = s.variables();
        maps[bi].resize(vars.size());
        std::vector<std::string> pnames;
        for (size_t i = 0; i < vars.size(); ++i) {
            bool is_param = i < s.parameters.size();
            if (is_param && !demote_params) {
                auto pos = std::find(m.sys.parameters.begin(), m.sys.parameters.end(), vars[i]);
                maps[bi][i] = (size_t)(pos - m.sys.parameters.begin());
                continue;
            }
            std::string want = vars[i];
            if (demote_params && is_param) want += "_s" + std::to_string(bi + 1);
            std::string name = fresh_name(want, taken);
            taken.insert(name);
            maps[bi][i] = m.sys.parameters.size() + m.sys.existentials.size();
            m.sys.existentials.push_back(name);
            if (is_param) pnames.push_back(name);
        }
        m.branch_params.push_back(pnames);
    }
    size_t nv = m.sys.nvars();
    m.branch_eqs.resize(systems.size());
    for (size_t bi = 0; bi < systems.size(); ++bi)
        for (const MultiPoly &e : systems[bi].equations)
            m.branch_eqs[bi].push_back(remap(e, maps[bi], nv));
    return m;
}

}  // namespace

PolySystem combine(const std::vector<PolySystem> &systems, CombineMode mode) {
    if (systems.empty()) throw domain_error("combine: no systems");
    for (const PolySystem &s : systems)
        if (!same_ring(s.ring, systems.front().ring))
            throw domain_error("combine: ring mismatch");
    if (systems.size() == 1 && mode != CombineMode::set_sum) return systems.front();

    if (mode == CombineMode::conjunction) {
        Merged m = merge_variables(systems, false);
        for (auto &eqs : m.branch_eqs)
            for (auto &e : eqs) m.sys.equations.push_back(std::move(e));
        m.sys.label = "conjunction";
        return m.sys;
    }
    if (mode == CombineMode::set_union) {
        /* pairwise products: all vanish iff one branch vanishes entirely */
        PolySystem acc = systems.front();
        for (size_t i = 1; i < systems.size(); ++i) {
            Merged m = merge_variables({acc, systems[i]}, false);
            for (const MultiPoly &g : m.branch_eqs[0])
                for (const MultiPoly &h : m.branch_eqs[1])
                    m.sys.equations.push_back(mp_mul(g, h));
            m.sys.label = "union";
            acc = m.sys;
        }
        return acc;
    }
    /* set_sum: fresh parameter equal to the sum of the branch parameters */
    for (const PolySystem &s : systems)
        if (s.parameters.size() != 1)
            throw domain_error("set_sum requires single-parameter systems");
    Merged m = merge_variables(systems, true);
    m.sys.parameters.push_back("a");
    /* renamed branch parameters shifted one slot right of the new parameter */
    size_t nv_old = m.sys.existentials.size();
    size_t nv = nv_old + 1;
    std::vector<size_t> shift(nv_old);
    for (size_t i = 0; i < nv_old; ++i) shift[i] = i + 1;
    for (auto &eqs : m.branch_eqs)
        for (auto &e : eqs) m.sys.equations.push_back(remap(e, shift, nv));
    const FieldPtr &T = m.sys.ring.top;
    MultiPoly sum = mp_var(0, nv);
    sum = mp_scale(T->from_rat(1), sum);
    for (size_t bi = 0; bi < systems.size(); ++bi) {
        auto vars = m.sys.variables();
        const std::string &pname = m.branch_params[bi][0];
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == pname) {
                sum = mp_sub(sum, mp_scale(T->from_rat(1), mp_var(i, nv)));
                break;
            }
    }
    m.sys.equations.push_back(sum);
    m.sys.label = "sum";
    return m.sys;
}

bool verify_witness(const PolySystem &sys, const Witness &w) {
    const FieldPtr &T = sys.ring.top;
    auto vars = sys.variables();
    std::vector<Element> vals;
    vals.reserve(vars.size());
    for (const std::string &v : vars) {
        auto it = w.find(v);
        if (it == w.end()) throw domain_error("witness missing variable " + v);
        if (it->second.field != T) throw domain_error("witness value in the wrong field");
        if (!is_integral(it->second)) throw domain_error("witness value not integral");
        vals.push_back(it->second);
    }
    for (const MultiPoly &e : sys.equations)
        if (!mp_eval(e, vals, T).is_zero()) return false;
    return true;
}

ScalarizedSystem scalarize(const PolySystem &sys) {
    const FieldPtr &T = sys.ring.top;
    size_t kappa = T->degree;
    ScalarizedSystem out;
    out.source_ring = sys.ring;
    out.source_vars = sys.variables();
    out.kappa = kappa;
    FieldPtr Q = field_by_name("rat");
    out.scalar.ring = identity_extension(Q);
    auto coord_names = [&](const std::string &v) {
        std::vector<std::string> n;
        for (size_t i = 0; i < kappa; ++i) n.push_back(v + "_" + std::to_string(i));
        return n;
    };
    for (const std::string &p : sys.parameters)
        for (auto &n : coord_names(p)) out.scalar.parameters.push_back(n);
    for (const std::string &x : sys.existentials)
        for (auto &n : coord_names(x)) out.scalar.existentials.push_back(n);
    size_t nv_new = out.scalar.nvars();

    /* basis elements as constants of T */
    std::vector<Element> basis;
    for (size_t i = 0; i < kappa; ++i) {
        QVec c(kappa, Rat(0));
        c[i] = 1;
        basis.push_back(T->from_integral(c));
    }
    for (const MultiPoly &e : sys.equations) {
        /* substitute v_j = sum_i v_{j,i} b_i and expand */
        MultiPoly expanded;
        bool first = true;
        for (const auto &t : e.terms) {
            Element c = t.second.field ? t.second : T->from_rat(1);
            if (!is_integral(c)) throw domain_error("scalarize: non-integral coefficient");
            MultiPoly term = mp_const(c, nv_new);
            for (size_t j = 0; j < t.first.size(); ++j)
                for (int k = 0; k < t.first[j]; ++k) {
                    MultiPoly lin;
                    for (size_t i = 0; i < kappa; ++i)
                        lin = lin.terms.empty()
                                  ? mp_scale(basis[i], mp_var(j * kappa + i, nv_new))
                                  : mp_add(lin, mp_scale(basis[i], mp_var(j * kappa + i, nv_new)));
                    term = mp_mul(term, lin);
                }
            expanded = first ? term : mp_add(expanded, term);
            first = false;
        }
        /* split into one rational equation per integral-basis coordinate */
        for (size_t r = 0; r < kappa; ++r) {
            MultiPoly comp;
            for (const auto &t : expanded.terms) {
                QVec ic = integral_coords(t.second);
                if (ic[r] == 0) continue;
                comp.terms.emplace(t.first, Q->from_rat(ic[r]));
            }
            if (!comp.terms.empty()) out.scalar.equations.push_back(std::move(comp));
        }
    }
    out.scalar.label = sys.label.empty() ? "scalarized" : sys.label + "_scalarized";
    return out;
}

Witness scalarize_witness(const ScalarizedSystem &sc, const Witness &w) {
    const FieldPtr &T = sc.source_ring.top;
    FieldPtr Q = sc.scalar.ring.top;
    Witness out;
    for (const std::string &v : sc.source_vars) {
        auto it = w.find(v);
        if (it == w.end()) throw domain_error("witness missing variable " + v);
        if (!is_integral(it->second)) throw domain_error("witness value not integral");
        QVec c = integral_coords(it->second);
        for (size_t i = 0; i < sc.kappa; ++i)
            out[v + "_" + std::to_string(i)] = Q->from_rat(c[i]);
    }
    (void)T;
    return out;
}

Witness unscalarize_witness(const ScalarizedSystem &sc, const Witness &sw) {
    const FieldPtr &T = sc.source_ring.top;
    Witness out;
    for (const std::string &v : sc.source_vars) {
        QVec c(sc.kappa, Rat(0));
        for (size_t i = 0; i < sc.kappa; ++i) {
            auto it = sw.find(v + "_" + std::to_string(i));
            if (it == sw.end()) throw domain_error("scalar witness missing a coordinate of " + v);
            c[i] = it->second.pow[0];
        }
        out[v] = T->from_integral(c);
    }
    return out;
}

std::optional<Witness> search_witness(const PolySystem &sys, long radius, const Witness &fixed) {
    const FieldPtr &T = sys.ring.top;
    size_t kappa = T->degree;
    auto vars = sys.variables();
    size_t nv = vars.size();
    std::vector<Element> vals(nv);
    std::vector<bool> have(nv, false);
    for (const auto &kv : fixed) {
        auto pos = std::find(vars.begin(), vars.end(), kv.first);
        if (pos == vars.end()) throw domain_error("fixed value for unknown variable " + kv.first);
        size_t i = (size_t)(pos - vars.begin());
        vals[i] = kv.second;
        have[i] = true;
    }
    std::vector<size_t> open;
    for (size_t i = 0; i < nv; ++i)
        if (!have[i]) open.push_back(i);

    /* equations checked as soon as their support is assigned */
    std::vector<std::vector<size_t>> check_after(nv + 1);
    {
        std::vector<int> last(sys.equations.size(), -1);
        for (size_t ei = 0; ei < sys.equations.size(); ++ei) {
            for (size_t v : mp_support(sys.equations[ei]))
                if (!have[v]) {
                    auto pos = std::find(open.begin(), open.end(), v);
                    last[ei] = std::max(last[ei], (int)(pos - open.begin()));
                }
            check_after[(size_t)(last[ei] + 1)].push_back(ei);
        }
    }
    for (size_t ei : check_after[0]) {
        std::vector<Element> probe = vals;
        for (size_t i = 0; i < nv; ++i)
            if (!have[i]) probe[i] = T->from_rat(0); /* unused by construction */
        if (!mp_eval(sys.equations[ei], probe, T).is_zero()) return std::nullopt;
    }

    /* odometer over coordinate cubes, 0, 1, -1, 2, -2, ... per coordinate */
    std::vector<long> seq;
    seq.push_back(0);
    for (long v = 1; v <= radius; ++v) {
        seq.push_back(v);
        seq.push_back(-v);
    }
    size_t depth = open.size();
    std::vector<std::vector<size_t>> idx(depth, std::vector<size_t>(kappa, 0));
    auto value_at = [&](size_t level) {
        QVec c(kappa, Rat(0));
        for (size_t i = 0; i < kappa; ++i) c[i] = Rat(seq[idx[level][i]]);
        return T->from_integral(c);
    };
    size_t level = 0;
    if (depth == 0) return Witness(fixed);
    while (true) {
        vals[open[level]] = value_at(level);
        bool ok = true;
        for (size_t ei : check_after[level + 1])
            if (!mp_eval(sys.equations[ei], vals, T).is_zero()) {
                ok = false;
                break;
            }
        if (ok && level + 1 == depth) {
            Witness w;
            for (size_t i = 0; i < nv; ++i) w[vars[i]] = vals[i];
            return w;
        }
        if (ok) {
            ++level;
            idx[level].assign(kappa, 0);
            continue;
        }
        /* advance the odometer at this level, backtracking when exhausted */
        while (true) {
            size_t i = 0;
            for (; i < kappa; ++i) {
                if (++idx[level][i] < seq.size()) break;
                idx[level][i] = 0;
            }
            if (i < kappa) break;
            if (level == 0) return std::nullopt;
            --level;
        }
    }
}

Witness membership_witness(const PolySystem &sys, const Element &a, const Ideal &I) {
    auto [i1, i2] = two_element_rep(I);
    auto [x, y] = solve_membership(a, i1, i2);
    Witness w;
    w["a"] = a;
    w["x"] = x;
    w["y"] = y;
    (void)sys;
    return w;
}

Witness nonzero_system_witness(const PolySystem &sys, const Element &a) {
    auto [x, y] = nonzero_witness(a);
    Witness w;
    w["a"] = a;
    w["x"] = x;
    w["y"] = y;
    (void)sys;
    return w;
}

Witness divides_witness(const PolySystem &sys, const Ideal &I, const Ideal &J) {
    auto [i1, i2] = two_element_rep(I);
    auto [j1, j2] = two_element_rep(J);
    auto [x1, y1] = solve_membership(j1, i1, i2);
    auto [x2, y2] = solve_membership(j2, i1, i2);
    (void)sys;
    return Witness{{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}};
}

Witness equal_witness(const PolySystem &sys, const Ideal &I, const Ideal &J) {
    auto [i1, i2] = two_element_rep(I);
    auto [j1, j2] = two_element_rep(J);
    Witness w;
    auto put = [&](const char *x, const char *y, std::pair<Element, Element> s) {
        w[x] = std::move(s.first);
        w[y] = std::move(s.second);
    };
    put("x1", "y1", solve_membership(j1, i1, i2));
    put("x2", "y2", solve_membership(j2, i1, i2));
    put("x3", "y3", solve_membership(i1, j1, j2));
    put("x4", "y4", solve_membership(i2, j1, j2));
    (void)sys;
    return w;
}

Witness coprime_witness(const PolySystem &sys, const Ideal &I, const Ideal &J) {
    auto [u, v] = solve_coprime(I, J);
    auto [i1, i2] = two_element_rep(I);
    auto [j1, j2] = two_element_rep(J);
    auto [x1, y1] = solve_membership(u, i1, i2);
    auto [x2, y2] = solve_membership(v, j1, j2);
    (void)sys;
    return Witness{{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}};
}

Witness ratio_witness(const PolySystem &sys, const Element &a, const Element &b,
                      const Ideal &I, const Ideal &J) {
    auto [i1, i2] = two_element_rep(I);
    auto [j1, j2] = two_element_rep(J);
    Witness w{{"a", a}, {"b", b}};
    auto put = [&](const char *x, const char *y, std::pair<Element, Element> s) {
        w[x] = std::move(s.first);
        w[y] = std::move(s.second);
    };
    /* a J = b I: generator memberships both ways, then the b != 0 guard */
    put("x1", "y1", solve_membership(a * j1, b * i1, b * i2));
    put("x2", "y2", solve_membership(a * j2, b * i1, b * i2));
    put("x3", "y3", solve_membership(b * i1, a * j1, a * j2));
    put("x4", "y4", solve_membership(b * i2, a * j1, a * j2));
    put("xb", "yb", nonzero_witness(b));
    bool with_coprime = std::find(sys.existentials.begin(), sys.existentials.end(),
                                  "xc1") != sys.existentials.end();
    if (with_coprime) {
        auto [u, v] = solve_coprime(I, J);
        put("xc1", "yc1", solve_membership(u, i1, i2));
        put("xc2", "yc2", solve_membership(v, j1, j2));
    }
    return w;
}

Witness congruence_witness(const PolySystem &sys, const Element &a, const Element &b,
                           const Ideal &I) {
    auto [i1, i2] = two_element_rep(I);
    auto [x, y] = solve_membership(a - b, i1, i2);
    (void)sys;
    return Witness{{"a", a}, {"b", b}, {"x", x}, {"y", y}};
}

}  // namespace diodef
