#include "diodef/roots.hpp"

#include <algorithm>

namespace diodef {

QC qc_add(const QC &a, const QC &b) { return {a.re + b.re, a.im + b.im}; }
QC qc_sub(const QC &a, const QC &b) { return {a.re - b.re, a.im - b.im}; }
QC qc_mul(const QC &a, const QC &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QC qc_conj(const QC &a) { return {a.re, -a.im}; }
Rat qc_abs2(const QC &a) { return a.re * a.re + a.im * a.im; }

QC qc_eval(const QPoly &p, const QC &z) {
    QC v;
    for (size_t i = p.size(); i-- > 0;) {
        v = qc_mul(v, z);
        v.re += p[i];
    }
    return v;
}

/* ---- float stage: Durand-Kerner over mpf ---- */

namespace {

struct CF {
    mpf_class re, im;
};

CF cf_make(long prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

CF cf_sub(const CF &a, const CF &b) { return {a.re - b.re, a.im - b.im}; }
CF cf_mul(const CF &a, const CF &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CF cf_div(const CF &a, const CF &b) {
    mpf_class n2 = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
}
mpf_class cf_abs2(const CF &a) { return a.re * a.re + a.im * a.im; }

std::vector<CF> dk_core(const std::vector<CF> &cf, long prec) {
    int d = (int)cf.size() - 1;
    auto eval = [&](const CF &z) {
        CF v = cf_make(prec);
        for (size_t i = cf.size(); i-- > 0;) {
            v = cf_mul(v, z);
            v.re += cf[i].re;
            v.im += cf[i].im;
        }
        return v;
    };
    /* Cauchy bound 1 + max |a_i| */
    mpf_class scale(1, prec);
    for (int i = 0; i < d; i++) {
        mpf_class m = 1 + sqrt(cf_abs2(cf[i]));
        if (m > scale) scale = m;
    }
    /* standard deterministic start: powers of 0.4 + 0.9i, scaled */
    std::vector<CF> z(d, cf_make(prec));
    CF seed{mpf_class("0.4", prec), mpf_class("0.9", prec)};
    CF cur{mpf_class(1, prec), mpf_class(0, prec)};
    for (int k = 0; k < d; k++) {
        cur = cf_mul(cur, seed);
        z[k] = {cur.re * scale, cur.im * scale};
    }
    mpf_class eps(0, prec);
    mpf_div_2exp(eps.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), prec - 8);
    for (int iter = 0; iter < 64 + 8 * d; iter++) {
        mpf_class worst(0, prec);
        for (int k = 0; k < d; k++) {
            CF denom{mpf_class(1, prec), mpf_class(0, prec)};
            for (int j = 0; j < d; j++)
                if (j != k) denom = cf_mul(denom, cf_sub(z[k], z[j]));
            CF delta = cf_div(eval(z[k]), denom);
            z[k] = cf_sub(z[k], delta);
            mpf_class m = cf_abs2(delta);
            if (m > worst) worst = m;
        }
        if (worst < eps * eps) break;
    }
    return z;
}

std::vector<CF> durand_kerner(const ZPoly &f, long prec) {
    std::vector<CF> cf;
    for (const Int &c : f) cf.push_back({mpf_class(c, prec), mpf_class(0, prec)});
    return dk_core(cf, prec);
}

Rat rat_of_mpf(const mpf_class &x) {
    Rat q;
    mpq_set_f(q.get_mpq_t(), x.get_mpf_t());
    return q;
}

}  // namespace

std::vector<QC> approx_complex_roots(const std::vector<QC> &monic, long prec) {
    if (monic.size() < 2) return {};
    std::vector<CF> cf;
    for (const QC &c : monic) {
        mpf_class re(0, prec), im(0, prec);
        re = mpf_class(c.re.get_num(), prec) / mpf_class(c.re.get_den(), prec);
        im = mpf_class(c.im.get_num(), prec) / mpf_class(c.im.get_den(), prec);
        cf.push_back({re, im});
    }
    std::vector<CF> z = dk_core(cf, prec);
    std::vector<QC> out;
    for (const CF &w : z) out.push_back({rat_of_mpf(w.re), rat_of_mpf(w.im)});
    return out;
}


QCInterval eval_at_root(const RootSet &rs, const QPoly &g, size_t i) {
    const RootBox &box = rs.roots[i];
    QCInterval out;
    out.value = qc_eval(g, box.center);
    /* Lipschitz bound on the disk: |g'| <= sum k |g_k| R^(k-1) with
     * R >= |center| + radius */
    Rat R = sqrt_upper(qc_abs2(box.center)) + box.radius;
    Rat lip(0), pw(1);
    for (size_t k = 1; k < g.size(); k++) {
        Rat c = g[k] < 0 ? Rat(-g[k]) : g[k];
        lip += Rat((long)k) * c * pw;
        pw *= R;
    }
    out.err = lip * box.radius;
    return out;
}

RootSet isolate_roots(const ZPoly &f, long min_bits) {
    int d = z_deg(f);
    if (d < 1) throw domain_error("isolate_roots: degree >= 1 required");
    if (!is_monic(f)) throw domain_error("isolate_roots: monic input required");
    QPoly fq = q_poly(f);
    if (q_gcd(fq, q_derivative(fq)).size() > 1)
        throw domain_error("isolate_roots: squarefree input required");

    RootSet rs;
    rs.poly = f;
    if (d == 1) {
        RootBox b;
        b.center = {Rat(-f[0]), Rat(0)};
        b.radius = 0;
        b.real = true;
        rs.roots = {b};
        rs.conj = {0};
        rs.r1 = 1;
        rs.r2 = 0;
        rs.precision_bits = min_bits;
        return rs;
    }

    QPoly fder = q_derivative(fq);
    SturmChain chain = sturm_chain(fq);
    int r1 = sturm_count_all(chain);

    Rat target(1, 1);
    for (long b = 0; b < min_bits; b++) target /= 2;

    for (long prec = std::max(96L, min_bits + 32); prec <= 1L << 20; prec *= 2) {
        std::vector<CF> approx = durand_kerner(f, prec);
        std::vector<RootBox> boxes(d);
        bool ok = true;
        for (int k = 0; k < d && ok; k++) {
            QC c{rat_of_mpf(approx[k].re), rat_of_mpf(approx[k].im)};
            Rat fp2 = qc_abs2(qc_eval(fder, c));
            if (fp2 == 0) { ok = false; break; }
            Rat rad = Rat(d) * sqrt_upper(qc_abs2(qc_eval(fq, c)) / fp2);
            boxes[k].center = c;
            boxes[k].radius = rad;
            if (rad > target) ok = false;
        }
        /* pairwise disjoint? */
        for (int i = 0; i < d && ok; i++)
            for (int j = i + 1; j < d && ok; j++) {
                Rat sep = qc_abs2(qc_sub(boxes[i].center, boxes[j].center));
                Rat rr = boxes[i].radius + boxes[j].radius;
                if (sep <= rr * rr) ok = false;
            }
        if (!ok) continue;

        /* real identification via Sturm isolating intervals: each interval's
         * root lies in exactly one axis-touching disk */
        Rat eps = target;
        auto intervals = isolate_real_roots(f, eps);
        std::vector<int> matched(d, 0);
        for (const auto &[lo, hi] : intervals) {
            int hit = -1, cnt = 0;
            for (int k = 0; k < d; k++) {
                const RootBox &b = boxes[k];
                Rat im = b.center.im < 0 ? Rat(-b.center.im) : b.center.im;
                if (im > b.radius) continue;  // certified off-axis
                if (b.center.re + b.radius < lo || b.center.re - b.radius > hi) continue;
                hit = k;
                cnt++;
            }
            if (cnt != 1) { ok = false; break; }
            boxes[hit].real = true;
            matched[hit]++;
        }
        if (!ok) continue;
        int reals = 0;
        for (int k = 0; k < d; k++) {
            if (matched[k] > 1) ok = false;
            if (boxes[k].real) reals++;
            if (!boxes[k].real) {
                /* any unmatched disk must be certified off-axis */
                Rat im = boxes[k].center.im < 0 ? Rat(-boxes[k].center.im) : boxes[k].center.im;
                if (im <= boxes[k].radius) ok = false;
            }
        }
        if (!ok || reals != r1) continue;

        /* canonical (re, im) order with certified separations */
        std::vector<size_t> order(d);
        for (int k = 0; k < d; k++) order[k] = k;
        bool resolved = true;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            const RootBox &x = boxes[a], &y = boxes[b];
            if (x.center.re + x.radius < y.center.re - y.radius) return true;
            if (y.center.re + y.radius < x.center.re - x.radius) return false;
            if (x.center.im + x.radius < y.center.im - y.radius) return true;
            if (y.center.im + y.radius < x.center.im - x.radius) return false;
            if (a != b) resolved = false;
            return a < b;
        });
        if (!resolved) continue;

        rs.roots.clear();
        for (size_t idx : order) rs.roots.push_back(boxes[idx]);
        /* conjugate pairing (unique by disjointness) */
        rs.conj.assign(d, SIZE_MAX);
        for (int i = 0; i < d && ok; i++) {
            if (rs.roots[i].real) {
                rs.conj[i] = i;
                continue;
            }
            int hit = -1, cnt = 0;
            for (int j = 0; j < d; j++) {
                Rat sep = qc_abs2(qc_sub(qc_conj(rs.roots[i].center), rs.roots[j].center));
                Rat rr = rs.roots[i].radius + rs.roots[j].radius;
                if (sep <= rr * rr) {
                    hit = j;
                    cnt++;
                }
            }
            if (cnt != 1 || hit == i) { ok = false; break; }
            rs.conj[i] = hit;
        }
        if (!ok) continue;

        rs.r1 = r1;
        rs.r2 = (d - r1) / 2;
        rs.precision_bits = min_bits;
        return rs;
    }
    throw resource_error("root isolation did not certify within precision budget");
}

}  // namespace diodef
