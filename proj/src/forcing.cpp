#include "diodef/forcing.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "diodef/rng.hpp"

namespace diodef {

bool is_galois(const FieldPtr &K) {
    static std::mutex mtx;
    static std::map<const NumberField *, bool> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(K.get());
        if (it != memo.end()) return it->second;
    }
    bool res = automorphisms(K).size() == K->degree;
    std::lock_guard<std::mutex> lock(mtx);
    memo[K.get()] = res;
    return res;
}

namespace {

Int ipow(const Int &b, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), (unsigned long)e);
    return r;
}

bool n_ok(long n, long ell) {
    if (n <= 23 * ell) return false;
    Int rhs = ipow(Int(4 * n), ell);
    /* 10^(n - 2 ell) and the stricter 10^(n - 20 ell) */
    for (long shift : {2 * ell, 20 * ell}) {
        if (n - shift <= 0) return false;
        if (ipow(Int(10), n - shift) <= rhs) return false;
    }
    return true;
}

}  // namespace

ForcingParams compute_n(long ell) {
    if (ell < 1) throw domain_error("compute_n: ell must be positive");
    for (long n = 23 * ell + 1;; n++)
        if (n_ok(n, ell)) return ForcingParams{ell, n};
}

bool params_valid(const ForcingParams &p) {
    return p.ell >= 1 && n_ok(p.n, p.ell);
}

void validate_instance(const ForcingInstance &inst) {
    const FieldPtr &L = inst.ext.top;
    if (!same_field(inst.alpha.field, L)) throw domain_error("alpha must lie in the top field");
    if (!is_integral(inst.alpha)) throw domain_error("alpha must be integral");
    if (!same_field(inst.k.field, inst.ext.base)) throw domain_error("k must lie in the base field");
    if (!same_field(inst.modulus.field, inst.ext.base))
        throw domain_error("modulus must be an ideal of the base field");
    if (inst.params.ell != (long)L->degree)
        throw domain_error("params.ell must equal the degree of the top field");
    if (!params_valid(inst.params)) throw domain_error("forcing parameters violate the inequalities");
    if (!is_galois(L)) throw domain_error("top field is not Galois");
}

namespace {

Element alpha_product(const ForcingInstance &inst) {
    const FieldPtr &L = inst.ext.top;
    Element prod = L->one();
    for (long j = 1; j <= inst.params.n; j++) prod = prod * (inst.alpha - L->from_rat(Rat(j)));
    return prod;
}

}  // namespace

bool check_hypotheses(const ForcingInstance &inst) {
    validate_instance(inst);
    Element prod = alpha_product(inst);
    if (prod.is_zero()) return false; /* alpha in {1..n} */
    Ideal P = principal_ideal(prod);
    Ideal extended = extend_ideal(inst.modulus, inst.ext);
    if (!ideal_divides(P, extended)) return false;
    Element k_up = embed_element(inst.ext.emb, inst.k);
    return congruent_mod(inst.alpha, k_up, inst.modulus, inst.ext);
}

const char *verdict_name(ForcingVerdict v) {
    switch (v) {
        case ForcingVerdict::hypotheses_fail: return "hypotheses_fail";
        case ForcingVerdict::alpha_in_base: return "alpha_in_base";
        default: return "COUNTEREXAMPLE";
    }
}

ForcingVerdict forcing_conclusion(const ForcingInstance &inst) {
    if (!check_hypotheses(inst)) return ForcingVerdict::hypotheses_fail;
    auto pre = contract_element(inst.ext.emb, inst.alpha);
    if (pre && is_integral(*pre)) return ForcingVerdict::alpha_in_base;
    return ForcingVerdict::counterexample;
}

/* ---- falsification harness ---- */

namespace {

const std::vector<long> &primes_up_to(long n) {
    static std::mutex mtx;
    static std::vector<long> primes;
    static long limit = 1;
    std::lock_guard<std::mutex> lock(mtx);
    if (n > limit) {
        std::vector<bool> comp((size_t)n + 1, false);
        primes.clear();
        for (long p = 2; p <= n; p++) {
            if (comp[(size_t)p]) continue;
            primes.push_back(p);
            for (long q = p * p; q <= n; q += p) comp[(size_t)q] = true;
        }
        limit = n;
    }
    return primes;
}

/* divisors of the norm_bound-smooth part of c, ascending, capped */
std::vector<Int> bounded_divisors(const Int &c, const Int &norm_bound, size_t max_count) {
    long bound = (long)norm_bound.get_si();
    std::vector<std::pair<long, int>> facs;
    Int rem = c;
    for (long p : primes_up_to(bound)) {
        if (Int(p) > rem) break;
        int a = 0;
        while (rem % p == 0) {
            rem /= p;
            a++;
        }
        if (a > 0) facs.push_back({p, a});
    }
    std::vector<Int> divs{Int(1)};
    for (const auto &[p, a] : facs) {
        size_t sz = divs.size();
        Int pe(1);
        for (int i = 1; i <= a; i++) {
            pe *= p;
            if (pe > norm_bound) break;
            for (size_t t = 0; t < sz; t++) {
                Int d = divs[t] * pe;
                if (d <= norm_bound) divs.push_back(d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    if (divs.size() > max_count) divs.resize(max_count);
    return divs;
}

/* contraction of an ideal of O_L to Z: the positive generator of the set of
 * rational integers in the lattice */
Int contract_to_z(const Ideal &P) {
    size_t d = P.hnf.size();
    if (d == 1) return P.hnf[0][0];
    /* integers m with (m,0,...,0) in the lattice: kernel of the last d-1
     * coordinates of y * H */
    ZMat cols(d, IVec(d - 1));
    for (size_t i = 0; i < d; i++)
        for (size_t j = 1; j < d; j++) cols[i][j - 1] = P.hnf[i][j];
    ZMat ker = z_kernel_left(cols);
    if (ker.size() != 1) throw domain_error("contract_to_z: unexpected kernel rank");
    Int m(0);
    for (size_t i = 0; i < d; i++) m += ker[0][i] * P.hnf[i][0];
    if (m < 0) m = -m;
    if (m == 0) throw domain_error("contract_to_z: trivial contraction");
    return m;
}

struct AlphaBatch {
    long trials = 0;
    long hypotheses_fail = 0;
    long alpha_in_base = 0;
    long counterexample = 0;
    long full_path_checks = 0;
};

AlphaBatch run_alpha(const FieldPtr &L, const FieldExtension &ext, const ForcingParams &params,
                     const IVec &alpha_coords, const Int &norm_bound, long budget,
                     uint64_t alpha_seed) {
    AlphaBatch batch;
    const FieldPtr &Q = ext.base;
    Element alpha = L->from_integral(QVec(alpha_coords.begin(), alpha_coords.end()));
    Element prod = L->one();
    for (long j = 1; j <= params.n; j++) prod = prod * (alpha - L->from_rat(Rat(j)));
    /* alpha is outside Z, so the product cannot vanish */
    Ideal P = principal_ideal(prod);
    Int c = contract_to_z(P);
    auto rng = task_rng("forcing_fuzz_k", alpha_seed);
    for (const Int &m : bounded_divisors(c, norm_bound, 40)) {
        Ideal I = principal_ideal(Q->from_rat(Rat(m)));
        Ideal extended = extend_ideal(I, ext);
        bool divisible = ideal_divides(P, extended);
        /* k row: all residues when small, else a deterministic sample */
        std::vector<Int> ks;
        if (m <= 25)
            for (Int k(0); k < m; k++) ks.push_back(k);
        else {
            for (Int k(0); k < 5; k++) ks.push_back(k);
            for (int t = 0; t < 20; t++) ks.push_back(Int((unsigned long)rng()) % m);
        }
        int full = 0;
        for (const Int &kv : ks) {
            if (batch.trials >= budget) return batch;
            ForcingInstance inst{ext, alpha, I, Q->from_rat(Rat(kv)), params};
            ForcingVerdict v;
            if (!divisible && full >= 3) {
                /* hypothesis one already failed exactly; k cannot change it */
                v = ForcingVerdict::hypotheses_fail;
            } else {
                v = forcing_conclusion(inst);
                batch.full_path_checks++;
                full++;
            }
            batch.trials++;
            switch (v) {
                case ForcingVerdict::hypotheses_fail: batch.hypotheses_fail++; break;
                case ForcingVerdict::alpha_in_base: batch.alpha_in_base++; break;
                default: batch.counterexample++;
            }
        }
    }
    return batch;
}

}  // namespace

FuzzReport forcing_fuzz(const FieldPtr &L, long trials, long height_bound, const Int &norm_bound,
                        uint64_t seed, int jobs) {
    if (norm_bound < 1 || norm_bound > 10000000) throw resource_error("norm bound out of range");
    if (height_bound < 1) throw domain_error("height bound must be positive");
    if (jobs < 1) jobs = 1;
    FieldPtr Q = field_by_name("rat");
    FieldExtension ext = make_extension(Q, L);
    ForcingParams params = compute_n((long)L->degree);
    size_t d = L->degree;

    auto rng = task_rng("forcing_fuzz:" + L->name, seed);
    FuzzReport report;
    const long chunk = 16;
    while (report.trials < trials) {
        /* fixed-size chunks keep the outcome independent of the job count */
        std::vector<IVec> alphas;
        std::vector<uint64_t> seeds;
        for (long i = 0; i < chunk; i++) {
            IVec coords(d);
            bool nontrivial = false;
            do {
                nontrivial = false;
                for (size_t j = 0; j < d; j++) {
                    long v = (long)(rng() % (unsigned long)(2 * height_bound + 1)) - height_bound;
                    coords[j] = v;
                    if (j > 0 && v != 0) nontrivial = true;
                }
            } while (!nontrivial);
            alphas.push_back(coords);
            seeds.push_back(rng());
        }
        long budget = trials - report.trials;
        long per_alpha = std::max(1L, budget / chunk + 1);
        std::vector<AlphaBatch> results(alphas.size());
        std::vector<std::thread> threads;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; w++)
            threads.emplace_back([&]() {
                size_t i;
                while ((i = next.fetch_add(1)) < alphas.size())
                    results[i] =
                        run_alpha(L, ext, params, alphas[i], norm_bound, per_alpha, seeds[i]);
            });
        for (auto &t : threads) t.join();
        for (const AlphaBatch &b : results) {
            report.trials += b.trials;
            report.alphas += b.trials > 0 ? 1 : 0;
            report.hypotheses_fail += b.hypotheses_fail;
            report.alpha_in_base += b.alpha_in_base;
            report.counterexample += b.counterexample;
            report.full_path_checks += b.full_path_checks;
        }
    }
    return report;
}

}  // namespace diodef
