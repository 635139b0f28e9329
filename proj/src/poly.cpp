#include "diodef/poly.hpp"

#include <algorithm>

#include "diodef/linalg.hpp"

namespace diodef {

void q_trim(QPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void z_trim(ZPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_poly(const ZPoly &p) {
    QPoly q;
    q.reserve(p.size());
    for (const Int &c : p) q.push_back(Rat(c));
    return q;
}

QPoly q_add(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    q_trim(r);
    return r;
}

QPoly q_sub(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    q_trim(r);
    return r;
}

QPoly q_mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    q_trim(r);
    return r;
}

QPoly q_scale(const QPoly &a, const Rat &c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto &x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> q_divrem(const QPoly &a, const QPoly &b) {
    if (b.empty()) throw domain_error("q_divrem: division by zero polynomial");
    QPoly rem = a, quot;
    int db = q_deg(b);
    if (q_deg(a) >= db) quot.assign(q_deg(a) - db + 1, Rat(0));
    while (q_deg(rem) >= db) {
        Rat c = rem.back() / b.back();
        int k = q_deg(rem) - db;
        quot[k] = c;
        for (int i = 0; i <= db; i++) rem[k + i] -= c * b[i];
        q_trim(rem);
    }
    return {quot, rem};
}

QPoly q_derivative(const QPoly &p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); i++) r.push_back(Rat((long)i) * p[i]);
    q_trim(r);
    return r;
}

QPoly q_gcd(QPoly a, QPoly b) {
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        QPoly r = q_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto &c : a) c /= lead;
    }
    return a;
}

Rat q_eval(const QPoly &p, const Rat &x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Int z_eval(const ZPoly &p, const Int &x) {
    Int v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

bool is_monic(const ZPoly &p) { return !p.empty() && p.back() == 1; }

Rat q_resultant(const QPoly &a, const QPoly &b) {
    int da = q_deg(a), db = q_deg(b);
    if (da < 0 || db < 0) return Rat(0);
    if (da == 0) {
        Rat r(1);
        for (int i = 0; i < db; i++) r *= a[0];
        return r;
    }
    if (db == 0) {
        Rat r(1);
        for (int i = 0; i < da; i++) r *= b[0];
        return r;
    }
    size_t n = da + db;
    QMat syl(n, QVec(n, Rat(0)));
    for (int i = 0; i < db; i++)
        for (int j = 0; j <= da; j++) syl[i][i + j] = a[da - j];
    for (int i = 0; i < da; i++)
        for (int j = 0; j <= db; j++) syl[db + i][i + j] = b[db - j];
    return q_det(syl);
}

Int z_discriminant(const ZPoly &p) {
    int d = z_deg(p);
    if (d < 1) throw domain_error("discriminant needs degree >= 1");
    QPoly f = q_poly(p);
    Rat res = q_resultant(f, q_derivative(f));
    Rat disc = res / p.back();
    if ((Int(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
    if (!is_integer(disc)) throw domain_error("non-integral discriminant");
    return disc.get_num();
}

SturmChain sturm_chain(const QPoly &p) {
    SturmChain c;
    QPoly f = p;
    q_trim(f);
    if (f.empty()) throw domain_error("sturm: zero polynomial");
    c.seq.push_back(f);
    QPoly g = q_derivative(f);
    while (!g.empty()) {
        c.seq.push_back(g);
        QPoly r = q_divrem(c.seq[c.seq.size() - 2], g).second;
        for (auto &x : r) x = -x;
        g = std::move(r);
    }
    return c;
}

static int sign_of(const Rat &q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

static int variations_at(const SturmChain &c, const Rat &x) {
    int var = 0, last = 0;
    for (const QPoly &p : c.seq) {
        int s = sign_of(q_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) var++;
        last = s;
    }
    return var;
}

static int variations_at_inf(const SturmChain &c, int dir) {
    /* sign at +/-infinity = sign of leading coeff (times parity for -inf) */
    int var = 0, last = 0;
    for (const QPoly &p : c.seq) {
        int s = sign_of(p.back());
        if (dir < 0 && q_deg(p) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) var++;
        last = s;
    }
    return var;
}

int sturm_count(const SturmChain &c, const Rat &a, const Rat &b) {
    return variations_at(c, a) - variations_at(c, b);
}

int sturm_count_all(const SturmChain &c) {
    return variations_at_inf(c, -1) - variations_at_inf(c, +1);
}

Rat root_bound(const ZPoly &p) {
    int d = z_deg(p);
    if (d < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < d; i++) {
        Rat c = Rat(p[i]) / Rat(p[d]);
        if (c < 0) c = -c;
        if (c > m) m = c;
    }
    return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly &p, const Rat &eps) {
    QPoly f = q_poly(p);
    if (q_gcd(f, q_derivative(f)).size() > 1)
        throw domain_error("isolate_real_roots: input not squarefree");
    SturmChain c = sturm_chain(f);
    Rat bound = root_bound(p);
    std::vector<std::pair<Rat, Rat>> work{{-bound - 1, bound + 1}}, done;
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int k = sturm_count(c, lo, hi);
        if (k == 0) continue;
        if (k == 1 && hi - lo <= eps) {
            done.push_back({lo, hi});
            continue;
        }
        Rat mid = (lo + hi) / 2;
        /* nudge off a root so interval ends stay non-roots */
        while (q_eval(f, mid) == 0) mid = (lo + mid) / 2;
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }
    std::sort(done.begin(), done.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return done;
}

std::vector<Int> divisors_of(const Int &n) {
    Int m = abs(n);
    if (m == 0) throw domain_error("divisors_of(0)");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; d++) {
        if (!divides(d, m)) continue;
        small.push_back(d);
        if (d * d != m) large.push_back(m / d);
    }
    for (size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
    return small;
}

/* Lagrange interpolation through (t_i, v_i) */
static QPoly interpolate(const std::vector<Int> &ts, const std::vector<Int> &vs) {
    QPoly acc;
    for (size_t i = 0; i < ts.size(); i++) {
        QPoly basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < ts.size(); j++) {
            if (j == i) continue;
            basis = q_mul(basis, QPoly{Rat(-ts[j]), Rat(1)});
            denom *= Rat(ts[i] - ts[j]);
        }
        acc = q_add(acc, q_scale(basis, Rat(vs[i]) / denom));
    }
    return acc;
}

std::optional<ZPoly> z_monic_factor(const ZPoly &f) {
    int d = z_deg(f);
    if (d < 2) return std::nullopt;
    if (!is_monic(f)) throw domain_error("z_monic_factor: input must be monic");
    QPoly fq = q_poly(f);

    /* linear factors: rational root theorem (roots divide f(0); f(0)=0 handled) */
    if (f[0] == 0) return ZPoly{Int(0), Int(1)};
    for (const Int &d0 : divisors_of(f[0]))
        for (int s : {1, -1}) {
            Int r = s * d0;
            if (z_eval(f, r) == 0) return ZPoly{-r, Int(1)};
        }

    /* Kronecker for factor degrees 2..d/2: sample points avoiding f(t)=0
     * (a zero would have been caught above for integer t) */
    for (int k = 2; k <= d / 2; k++) {
        std::vector<Int> ts;
        for (Int t = 0; (int)ts.size() < k + 1; t = (t > 0 ? Int(-t) : Int(-t + 1)))
            if (z_eval(f, t) != 0) ts.push_back(t);
        std::vector<std::vector<Int>> div_lists;
        size_t combos = 1;
        for (const Int &t : ts) {
            std::vector<Int> ds;
            for (const Int &u : divisors_of(z_eval(f, t))) {
                ds.push_back(u);
                ds.push_back(-u);
            }
            div_lists.push_back(ds);
            combos *= ds.size();
            if (combos > 5'000'000) throw resource_error("Kronecker search too large");
        }
        std::vector<size_t> idx(k + 1, 0);
        std::vector<Int> vals(k + 1);
        while (true) {
            for (int i = 0; i <= k; i++) vals[i] = div_lists[i][idx[i]];
            QPoly g = interpolate(ts, vals);
            if (q_deg(g) == k && (g.back() == 1 || g.back() == -1)) {
                bool integral = true;
                for (const Rat &c : g)
                    if (!is_integer(c)) { integral = false; break; }
                if (integral) {
                    if (g.back() == -1)
                        for (auto &c : g) c = -c;
                    if (q_divrem(fq, g).second.empty()) {
                        ZPoly out;
                        for (const Rat &c : g) out.push_back(c.get_num());
                        return out;
                    }
                }
            }
            int pos = 0;
            while (pos <= k && ++idx[pos] == div_lists[pos].size()) idx[pos++] = 0;
            if (pos > k) break;
        }
    }
    return std::nullopt;
}

bool z_irreducible(const ZPoly &f) {
    int d = z_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    return !z_monic_factor(f).has_value();
}

}  // namespace diodef
