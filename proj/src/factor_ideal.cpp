#include <algorithm>

#include "diodef/fpfactor.hpp"
#include "diodef/ideal.hpp"
#include "diodef/rng.hpp"

namespace diodef {

/* ---- rational integer factorization ---- */

namespace {

Int pollard_brent(const Int &n) {
    /* Brent's cycle variant; deterministic constant sweep */
    for (long c = 1; c < 64; c++) {
        Int x(2), y(2), d(1);
        auto step = [&](const Int &v) { return Int((v * v + c) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break; /* cycle without factor; next c */
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
    throw resource_error("integer factorization failed");
}

void factor_into(Int n, std::vector<Int> &out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(Int(n / d), out);
}

}  // namespace

std::vector<std::pair<Int, int>> int_factor(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw domain_error("int_factor: zero");
    std::vector<Int> primes;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % d == 0) {
            primes.push_back(Int(d));
            n /= d;
        }
    }
    for (Int d(17); d * d <= n && d <= 1000000; d += 2) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, int>> out;
    for (const Int &p : primes) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.push_back({p, 1});
    }
    return out;
}

/* ---- arithmetic in F_p[x]; vectors ascending, entries in [0, p) ---- */

namespace {

using FpPoly = std::vector<Int>;

Int md(const Int &a, const Int &p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

void fp_trim(FpPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly &f) { return (int)f.size() - 1; }

FpPoly fp_reduce(const ZPoly &f, const Int &p) {
    FpPoly out;
    for (const Int &c : f) out.push_back(md(c, p));
    fp_trim(out);
    return out;
}

FpPoly fp_mul(const FpPoly &a, const FpPoly &b, const Int &p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) out[i + j] = md(out[i + j] + a[i] * b[j], p);
    fp_trim(out);
    return out;
}

Int fp_inv(const Int &a, const Int &p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw domain_error("fp_inv: not invertible");
    return r;
}

FpPoly fp_monic(FpPoly f, const Int &p) {
    fp_trim(f);
    if (f.empty()) return f;
    Int inv = fp_inv(f.back(), p);
    for (Int &c : f) c = md(c * inv, p);
    return f;
}

/* remainder of a by monic b */
FpPoly fp_rem(FpPoly a, const FpPoly &b, const Int &p) {
    fp_trim(a);
    int db = fp_deg(b);
    while (fp_deg(a) >= db) {
        Int c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); i++) a[shift + i] = md(a[shift + i] - c * b[i], p);
        fp_trim(a);
    }
    return a;
}

FpPoly fp_quot(FpPoly a, const FpPoly &b, const Int &p) {
    fp_trim(a);
    int db = fp_deg(b);
    if (fp_deg(a) < db) return {};
    FpPoly q(a.size() - b.size() + 1, Int(0));
    while (fp_deg(a) >= db) {
        Int c = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); i++) a[shift + i] = md(a[shift + i] - c * b[i], p);
        fp_trim(a);
    }
    return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int &p) {
    a = fp_monic(std::move(a), p);
    b = fp_monic(std::move(b), p);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = fp_monic(std::move(r), p);
    }
    return a;
}

FpPoly fp_deriv(const FpPoly &f, const Int &p) {
    FpPoly out;
    for (size_t i = 1; i < f.size(); i++) out.push_back(md(Int((long)i) * f[i], p));
    fp_trim(out);
    return out;
}

/* base^e mod f (f monic) */
FpPoly fp_powmod(const FpPoly &base, Int e, const FpPoly &f, const Int &p) {
    FpPoly result{Int(1)};
    FpPoly b = fp_rem(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, b, p), f, p);
        b = fp_rem(fp_mul(b, b, p), f, p);
        e /= 2;
    }
    return result;
}

bool fp_less(const FpPoly &a, const FpPoly &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/* trial division by all small monic polynomials; used for p <= 3 where the
 * derivative can vanish */
std::vector<std::pair<FpPoly, int>> fp_factor_small(FpPoly f, const Int &p) {
    std::vector<std::pair<FpPoly, int>> out;
    long pl = (long)p.get_si();
    for (int deg = 1; 2 * deg <= fp_deg(f); deg++) {
        std::vector<long> c((size_t)deg, 0);
        while (true) {
            FpPoly cand;
            for (long x : c) cand.push_back(Int(x));
            cand.push_back(Int(1));
            int mult = 0;
            while (fp_deg(f) >= deg && fp_rem(f, cand, p).empty()) {
                f = fp_quot(f, cand, p);
                mult++;
            }
            if (mult > 0) out.push_back({cand, mult});
            size_t k = 0;
            while (k < c.size() && ++c[k] >= pl) c[k++] = 0;
            if (k == c.size()) break;
        }
    }
    if (fp_deg(f) >= 1) out.push_back({f, 1});
    return out;
}

/* Cantor-Zassenhaus split of a squarefree product of r irreducibles of
 * degree k (p odd) */
void fp_equal_degree(const FpPoly &g, int k, const Int &p, std::mt19937_64 &rng,
                     std::vector<FpPoly> &out) {
    int r = fp_deg(g) / k;
    if (r == 1) {
        out.push_back(g);
        return;
    }
    Int e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), (unsigned long)k);
    e = (e - 1) / 2;
    for (int tries = 0; tries < 512; tries++) {
        FpPoly u;
        for (int i = 0; i < fp_deg(g); i++) u.push_back(md(Int((unsigned long)rng()), p));
        fp_trim(u);
        if (fp_deg(u) < 1) continue;
        FpPoly v = fp_powmod(u, e, g, p);
        if (v.empty()) continue;
        v[0] = md(v[0] - 1, p);
        fp_trim(v);
        FpPoly w = fp_gcd(v, g, p);
        if (fp_deg(w) > 0 && fp_deg(w) < fp_deg(g)) {
            fp_equal_degree(w, k, p, rng, out);
            fp_equal_degree(fp_quot(g, w, p), k, p, rng, out);
            return;
        }
    }
    throw resource_error("equal-degree splitting did not converge");
}

/* distinct-degree then equal-degree factorization of squarefree monic f */
std::vector<FpPoly> fp_split_squarefree(FpPoly f, const Int &p, std::mt19937_64 &rng) {
    std::vector<FpPoly> out;
    FpPoly x{Int(0), Int(1)};
    FpPoly h = x;
    for (int k = 1; 2 * k <= fp_deg(f); k++) {
        h = fp_powmod(h, p, f, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, Int(0));
        hx[1] = md(hx[1] - 1, p);
        fp_trim(hx);
        FpPoly g = fp_gcd(hx, f, p);
        if (fp_deg(g) > 0) {
            fp_equal_degree(g, k, p, rng, out);
            f = fp_quot(f, g, p);
            h = fp_rem(h, f, p);
        }
    }
    if (fp_deg(f) >= 1) out.push_back(f);
    return out;
}

std::vector<std::pair<FpPoly, int>> fp_factor_inner(const FpPoly &f, const Int &p,
                                                    std::mt19937_64 &rng) {
    std::vector<std::pair<FpPoly, int>> out;
    if (fp_deg(f) < 1) return out;
    if (p <= 3) return fp_factor_small(f, p);
    FpPoly fd = fp_deriv(f, p);
    FpPoly g = fp_gcd(f, fd, p); /* deg <= 4 and p >= 5, so f' is nonzero */
    if (fp_deg(g) == 0) {
        for (const FpPoly &q : fp_split_squarefree(f, p, rng)) out.push_back({q, 1});
        return out;
    }
    out = fp_factor_inner(fp_quot(f, g, p), p, rng);
    for (const auto &[q, m] : fp_factor_inner(g, p, rng)) {
        bool merged = false;
        for (auto &[q2, m2] : out)
            if (q2 == q) {
                m2 += m;
                merged = true;
            }
        if (!merged) out.push_back({q, m});
    }
    return out;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> fp_factor_monic(const ZPoly &f, const Int &p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw domain_error("fp_factor_monic: modulus is not prime");
    FpPoly fr = fp_reduce(f, p);
    if (fp_deg(fr) != z_deg(f)) throw domain_error("fp_factor_monic: leading coefficient vanishes");
    fr = fp_monic(std::move(fr), p);
    std::string label = "fpfactor:" + p.get_str();
    for (const Int &c : fr) label += ":" + c.get_str();
    auto rng = task_rng(label, 0);
    auto fac = fp_factor_inner(fr, p, rng);
    std::sort(fac.begin(), fac.end(),
              [](const auto &a, const auto &b) { return fp_less(a.first, b.first); });
    /* verify the product reconstructs f mod p */
    FpPoly prod{Int(1)};
    for (const auto &[q, m] : fac)
        for (int i = 0; i < m; i++) prod = fp_mul(prod, q, p);
    if (prod != fr) throw domain_error("fp_factor_monic: reconstruction failed");
    std::vector<std::pair<ZPoly, int>> out;
    for (auto &[q, m] : fac) out.push_back({ZPoly(q.begin(), q.end()), m});
    return out;
}

std::shared_ptr<const FpFactorization> kd_factorization(const FieldPtr &K, const Int &p) {
    std::lock_guard<std::mutex> lock(K->cache_mutex);
    auto it = K->kd_cache.find(p);
    if (it != K->kd_cache.end()) return it->second;
    for (size_t idx = 0; idx < K->kd_gens.size(); idx++) {
        if (K->kd_gens[idx].index % p == 0) continue;
        auto out = std::make_shared<FpFactorization>();
        out->p = p;
        out->kd_index = idx;
        out->factors = fp_factor_monic(K->kd_gens[idx].gamma_min_poly, p);
        K->kd_cache[p] = out;
        return out;
    }
    throw domain_error("prime " + p.get_str() + " divides the index of every available generator");
}

/* ---- prime splitting of ideals ---- */

PrimeFactorization factor(const Ideal &I) {
    const FieldPtr &K = I.field;
    PrimeFactorization out;
    Int N = I.norm();
    if (N == 1) return out;
    for (const auto &[p, a] : int_factor(N)) {
        (void)a;
        auto fp = kd_factorization(K, p);
        const KdGenerator &kd = K->kd_gens[fp->kd_index];
        Element pe = K->from_rat(Rat(p));
        for (const auto &[g, mult] : fp->factors) {
            (void)mult;
            /* P = (p, g(gamma)) */
            Element val = K->zero();
            for (size_t i = g.size(); i-- > 0;) val = val * kd.gamma + K->from_rat(Rat(g[i]));
            Ideal P = ideal_from_gens(K, {pe, val});
            int f = z_deg(g);
            Int nf;
            mpz_pow_ui(nf.get_mpz_t(), p.get_mpz_t(), (unsigned long)f);
            if (P.norm() != nf) throw domain_error("prime splitting produced a wrong norm");
            int v = valuation(I, P);
            if (v > 0) out.factors.push_back({PrimeIdeal{P, p, f}, v});
        }
    }
    Ideal recon = unit_ideal(K);
    for (const auto &[P, e] : out.factors) recon = ideal_mul(recon, ideal_pow(P.ideal, e));
    if (recon != I) throw domain_error("factorization does not reconstruct the ideal");
    return out;
}

}  // namespace diodef
