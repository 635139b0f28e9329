#include "diodef/ec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "diodef/errors.hpp"

namespace diodef {

namespace {

Element rat_el(const FieldPtr &K, const Rat &q) { return K->from_rat(q); }

Element curve_rhs(const CurvePtr &E, const Element &x) {
    return x * x * x + E->A * x + E->B;
}

Int int_lcm(const Int &a, const Int &b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_pow(const Int &b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

long element_digits(const Element &a) {
    size_t best = 1;
    for (const Rat &q : a.pow) best = std::max(best, decimal_digits(q));
    return (long)best;
}

long point_digits(const Point &P) {
    if (P.infinity) return 1;
    return std::max(element_digits(P.x), element_digits(P.y));
}

Point infinity_point() { return Point{}; }

bool on_curve(const CurvePtr &E, const Point &P) {
    if (P.infinity) return true;
    return P.y * P.y == curve_rhs(E, P.x);
}

Point make_point(const CurvePtr &E, const Element &x, const Element &y) {
    Point P;
    P.infinity = false;
    P.x = x;
    P.y = y;
    if (x.field != E->field || y.field != E->field)
        throw domain_error("point coordinates from a different field");
    if (!on_curve(E, P)) throw domain_error("point is not on the curve");
    return P;
}

bool points_equal(const Point &a, const Point &b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

Point ec_neg(const CurvePtr &E, const Point &P) {
    (void)E;
    if (P.infinity) return P;
    Point R = P;
    R.y = -P.y;
    return R;
}

Point ec_add(const CurvePtr &E, const Point &P, const Point &Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Element lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y).is_zero()) return infinity_point();
        /* tangent: (3x^2 + A)/(2y) */
        const FieldPtr &K = E->field;
        lambda = (rat_el(K, 3) * P.x * P.x + E->A) / (rat_el(K, 2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Point R;
    R.infinity = false;
    R.x = lambda * lambda - P.x - Q.x;
    R.y = lambda * (P.x - R.x) - P.y;
    return R;
}

Point ec_mul(const CurvePtr &E, const Int &m, const Point &P, long digit_budget) {
    if (m == 0 || P.infinity) return infinity_point();
    Int n = m < 0 ? Int(-m) : m;
    Point base = m < 0 ? ec_neg(E, P) : P;
    Point acc = infinity_point();
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = ec_add(E, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = ec_add(E, acc, base);
        if (point_digits(acc) > digit_budget)
            throw resource_error("point coordinates exceeded the digit budget");
    }
    return acc;
}

CurvePtr make_curve(const FieldPtr &K, const Element &A, const Element &B, const Element &gx,
                    const Element &gy, std::optional<RankNote> note, const std::string &name) {
    auto E = std::make_shared<EllipticCurve>();
    E->field = K;
    E->A = A;
    E->B = B;
    E->rank_note = std::move(note);
    E->name = name;
    Element four = rat_el(K, 4), twenty7 = rat_el(K, 27);
    E->disc = rat_el(K, -16) * (four * A * A * A + twenty7 * B * B);
    if (E->disc.is_zero()) throw domain_error("singular curve: 4A^3 + 27B^2 = 0");
    CurvePtr C = E;
    E->generator = make_point(C, gx, gy);
    /* small multiples must stay away from the identity */
    Point acc = E->generator;
    for (int k = 2; k <= 12; ++k) {
        acc = ec_add(C, acc, E->generator);
        if (acc.infinity) throw domain_error("generator is torsion of order <= 12");
    }
    return C;
}

namespace {

struct NamedCurve {
    const char *name;
    const char *field;
    long A, B, gx, gy;
};

const std::vector<NamedCurve> &named_curves() {
    static const std::vector<NamedCurve> t = {
        {"x3m2", "rat", 0, -2, 3, 5},
        {"e37a", "rat", -16, 16, 0, 4},
        {"x3m2_gauss", "gauss", 0, -2, 3, 5},
    };
    return t;
}

}  // namespace

CurvePtr curve_by_name(const std::string &name) {
    static std::mutex mx;
    static std::map<std::string, CurvePtr> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const NamedCurve &c : named_curves()) {
        if (name == c.name) {
            FieldPtr K = field_by_name(c.field);
            CurvePtr E = make_curve(K, rat_el(K, c.A), rat_el(K, c.B), rat_el(K, c.gx),
                                    rat_el(K, c.gy), std::nullopt, c.name);
            cache.emplace(name, E);
            return E;
        }
    }
    throw domain_error("unknown curve: " + name);
}

std::vector<std::string> catalogue_curve_names() {
    std::vector<std::string> out;
    for (const NamedCurve &c : named_curves()) out.push_back(c.name);
    return out;
}

Element uniformizer_at(const CurvePtr &E, const Point &P) {
    (void)E;
    if (P.infinity) throw domain_error("uniformizer is undefined at the identity");
    if (P.y.is_zero()) throw domain_error("uniformizer is undefined at a 2-torsion point");
    return -P.x / P.y;
}

int element_valuation(const Element &a, const PrimeIdeal &p) {
    if (a.is_zero()) throw domain_error("valuation of zero");
    auto nd = num_den(a);
    return valuation(nd.first, p.ideal) - valuation(nd.second, p.ideal);
}

namespace {

/* valuation >= 0 is required; zero passes vacuously */
bool locally_integral(const Element &a, const PrimeIdeal &p) {
    return a.is_zero() || element_valuation(a, p) >= 0;
}

/* canonical residue of a p-integral value: write a = u/b with b a
 * denominator-ideal basis row outside p, then u * b^-1 mod p */
Element residue_value(const Ideal &P, const Element &a) {
    if (a.is_zero()) return P.field->from_rat(0);
    if (is_integral(a)) return reduce_mod(a, P);
    auto nd = num_den(a);
    const Ideal &den = nd.second;
    size_t d = den.hnf.size();
    for (size_t i = 0; i < d; ++i) {
        QVec coords(d);
        for (size_t j = 0; j < d; ++j) coords[j] = Rat(den.hnf[i][j]);
        Element b = P.field->from_integral(coords);
        if (P.contains(b)) continue;
        Element u = a * b;
        if (!is_integral(u)) throw std::logic_error("residue_value: numerator not integral");
        auto inv = inverse_mod(b, P);
        if (!inv) throw std::logic_error("residue_value: denominator not invertible");
        return reduce_mod(reduce_mod(u, P) * *inv, P);
    }
    throw domain_error("value has a pole at the prime");
}

std::string residue_key(const Element &a) {
    std::ostringstream os;
    for (const Int &c : int_coords(a)) os << c.get_str() << ",";
    return os.str();
}

}  // namespace

bool good_reduction(const CurvePtr &E, const PrimeIdeal &p) {
    if (p.p == 2 || p.p == 3) return false;
    if (!locally_integral(E->A, p) || !locally_integral(E->B, p)) return false;
    return element_valuation(E->disc, p) == 0;
}

ResidueCurve make_residue_curve(const CurvePtr &E, const PrimeIdeal &p) {
    if (!good_reduction(E, p))
        throw domain_error("bad reduction (or residue characteristic 2/3) at the prime");
    ResidueCurve rc;
    rc.curve = E;
    rc.prime = p;
    rc.A = residue_value(p.ideal, E->A);
    rc.B = residue_value(p.ideal, E->B);
    return rc;
}

RPoint rc_reduce_point(const ResidueCurve &rc, const Point &P) {
    RPoint r;
    if (P.infinity) return r;
    if (!locally_integral(P.x, rc.prime) || !locally_integral(P.y, rc.prime))
        throw domain_error("point has a pole at the prime");
    r.infinity = false;
    r.x = residue_value(rc.prime.ideal, P.x);
    r.y = residue_value(rc.prime.ideal, P.y);
    return r;
}

RPoint rc_add(const ResidueCurve &rc, const RPoint &a, const RPoint &b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    const Ideal &P = rc.prime.ideal;
    const FieldPtr &K = rc.curve->field;
    Element lambda;
    if (a.x == b.x) {
        if (reduce_mod(a.y + b.y, P).is_zero()) return RPoint{};
        Element num = reduce_mod(rat_el(K, 3) * a.x * a.x + rc.A, P);
        auto inv = inverse_mod(rat_el(K, 2) * a.y, P);
        if (!inv) throw std::logic_error("rc_add: tangent denominator not invertible");
        lambda = reduce_mod(num * *inv, P);
    } else {
        auto inv = inverse_mod(b.x - a.x, P);
        if (!inv) throw std::logic_error("rc_add: chord denominator not invertible");
        lambda = reduce_mod((b.y - a.y) * *inv, P);
    }
    RPoint r;
    r.infinity = false;
    r.x = reduce_mod(lambda * lambda - a.x - b.x, P);
    r.y = reduce_mod(lambda * (a.x - r.x) - a.y, P);
    return r;
}

RPoint rc_mul(const ResidueCurve &rc, const Int &m, const RPoint &a) {
    if (m == 0 || a.infinity) return RPoint{};
    Int n = m < 0 ? Int(-m) : m;
    RPoint base = a;
    if (m < 0) base.y = reduce_mod(-a.y, rc.prime.ideal);
    RPoint acc;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = rc_add(rc, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = rc_add(rc, acc, base);
    }
    return acc;
}

Int rc_group_order(const ResidueCurve &rc) {
    std::vector<Element> res = residues(rc.prime.ideal, Int(10000));
    std::map<std::string, long> squares;
    const Ideal &P = rc.prime.ideal;
    for (const Element &y : res) squares[residue_key(reduce_mod(y * y, P))]++;
    Int total = 1; /* the point at infinity */
    for (const Element &x : res) {
        Element c = reduce_mod(x * x * x + rc.A * x + rc.B, P);
        auto it = squares.find(residue_key(c));
        if (it != squares.end()) total += it->second;
    }
    return total;
}

Int rc_point_order(const ResidueCurve &rc, const RPoint &a) {
    if (a.infinity) return 1;
    Int order = rc_group_order(rc);
    for (const auto &qe : int_factor(order)) {
        const Int &q = qe.first;
        while (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t()) &&
               rc_mul(rc, order / q, a).infinity)
            order /= q;
    }
    if (!rc_mul(rc, order, a).infinity) throw std::logic_error("rc_point_order: descent failed");
    return order;
}

Int reduction_order(const CurvePtr &E, const Point &P, const PrimeIdeal &p) {
    ResidueCurve rc = make_residue_curve(E, p);
    return rc_point_order(rc, rc_reduce_point(rc, P));
}

std::pair<Point, KernelCertificate> kernel_point(const CurvePtr &E, const Point &P,
                                                 const Ideal &modulus,
                                                 const std::vector<int> &depths,
                                                 long digit_budget) {
    if (modulus.field != E->field) throw domain_error("modulus from a different field");
    KernelCertificate cert;
    cert.multiplier = 1;
    if (modulus.is_unit()) return {P, cert};
    PrimeFactorization fac = factor(modulus);
    size_t np = fac.factors.size();
    std::vector<int> want(np, 1);
    if (!depths.empty()) {
        if (depths.size() != np)
            throw domain_error("depth list does not match the modulus factorization");
        want = depths;
        for (int w : want)
            if (w < 1) throw domain_error("depths must be positive");
    }
    Int m = 1;
    for (size_t i = 0; i < np; ++i) {
        const PrimeIdeal &p = fac.factors[i].first;
        if (!good_reduction(E, p))
            throw domain_error("modulus meets a bad-reduction or characteristic-2/3 prime");
        Int ord = reduction_order(E, P, p);
        m = int_lcm(m, ord * int_pow(p.p, (unsigned long)(want[i] - 1)));
    }
    Point R = ec_mul(E, m, P, digit_budget);
    for (int round = 0; round < 64; ++round) {
        if (R.infinity) throw domain_error("multiple of the point hit the identity");
        Element t = uniformizer_at(E, R);
        auto nd = num_den(t);
        cert.vals.clear();
        bool ok = true;
        std::vector<size_t> shallow;
        for (size_t i = 0; i < np; ++i) {
            const PrimeIdeal &p = fac.factors[i].first;
            int v = valuation(nd.first, p.ideal) - valuation(nd.second, p.ideal);
            cert.vals.emplace_back(p, v);
            if (v < want[i]) {
                ok = false;
                shallow.push_back(i);
            }
        }
        if (ok) {
            cert.multiplier = m;
            return {R, cert};
        }
        for (size_t i : shallow) {
            R = ec_mul(E, fac.factors[i].first.p, R, digit_budget);
            m *= fac.factors[i].first.p;
        }
    }
    throw resource_error("kernel depth did not stabilize");
}

ApproxResult approximate(const CurvePtr &E, const Int &k, const Ideal &modulus,
                         long digit_budget) {
    if (k == 0) throw domain_error("k must be nonzero");
    if (modulus.is_unit()) throw domain_error("modulus must be a proper ideal");
    PrimeFactorization fac = factor(modulus);
    std::vector<int> depths;
    for (const auto &pe : fac.factors) depths.push_back(pe.second);
    ApproxResult out;
    out.k = k;
    out.modulus = modulus;
    for (int round = 0; round < 32; ++round) {
        auto [R, cert] = kernel_point(E, E->generator, modulus, depths, digit_budget);
        Point kR = ec_mul(E, k, R, digit_budget);
        if (kR.infinity) throw domain_error("k R is the identity; generator is torsion");
        Element s = uniformizer_at(E, kR) / uniformizer_at(E, R);
        Element diff = s - rat_el(E->field, Rat(k));
        bool ok = diff.is_zero();
        if (!ok) {
            auto nd = num_den(diff);
            ok = ideal_divides(modulus, nd.first);
        }
        if (ok) {
            out.s = s;
            out.multiplier = cert.multiplier;
            out.deepenings = round;
            return out;
        }
        for (int &d : depths) ++d;
    }
    throw resource_error("approximation did not reach the requested modulus");
}

NumeratorResult numerator_witness(const CurvePtr &E, const Element &beta, long digit_budget) {
    if (beta.is_zero()) throw domain_error("beta must be nonzero");
    if (beta.field != E->field) throw domain_error("beta from a different field");
    if (!is_integral(beta)) throw domain_error("beta must be integral");
    Ideal B = principal_ideal(beta);
    NumeratorResult out;
    out.beta = beta;
    if (B.is_unit()) {
        /* any s in the image works; use the first multiple with t defined */
        for (int j = 1; j <= 8; ++j) {
            Point R = ec_mul(E, j, E->generator, digit_budget);
            Point Q = ec_mul(E, 2, R, digit_budget);
            if (R.infinity || Q.infinity || R.y.is_zero() || Q.y.is_zero() || R.x.is_zero() ||
                Q.x.is_zero())
                continue;
            out.s = uniformizer_at(E, Q) / uniformizer_at(E, R);
            out.r_mult = j;
            out.q_mult = 2;
            return out;
        }
        throw resource_error("no multiple with a defined uniformizer");
    }
    PrimeFactorization fac = factor(B);
    Int qmul = 1;
    for (const auto &pe : fac.factors) qmul *= int_pow(pe.first.p, (unsigned long)pe.second);
    for (int extra = 0; extra < 16; ++extra) {
        std::vector<int> depths(fac.factors.size(), 1 + extra);
        auto [R, cert] = kernel_point(E, E->generator, B, depths, digit_budget);
        Point Q = ec_mul(E, qmul, R, digit_budget);
        if (Q.infinity) throw domain_error("Q is the identity; generator is torsion");
        Element s = uniformizer_at(E, Q) / uniformizer_at(E, R);
        auto nd = num_den(s);
        if (ideal_divides(B, nd.first)) {
            out.s = s;
            out.r_mult = cert.multiplier;
            out.q_mult = qmul;
            return out;
        }
    }
    throw resource_error("numerator divisibility did not stabilize");
}

/* ---- division polynomials and coset membership ---- */

namespace {

EPoly ep_add(const EPoly &a, const EPoly &b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const FieldPtr &K = a[0].field;
    EPoly r(std::max(a.size(), b.size()), K->from_rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    e_trim(r);
    return r;
}

EPoly ep_neg(const EPoly &a) {
    EPoly r = a;
    for (Element &c : r) c = -c;
    return r;
}

EPoly ep_sub(const EPoly &a, const EPoly &b) { return ep_add(a, ep_neg(b)); }

EPoly ep_scale(const Element &c, const EPoly &a) {
    if (c.is_zero()) return {};
    EPoly r = a;
    for (Element &x : r) x = c * x;
    e_trim(r);
    return r;
}

/* elements of K[x,y] / (y^2 - f): a(x) + b(x) y */
struct XY {
    EPoly a, b;
};

XY xy_mul(const XY &u, const XY &v, const EPoly &f) {
    XY r;
    r.a = ep_add(e_mul(u.a, v.a), e_mul(e_mul(u.b, v.b), f));
    r.b = ep_add(e_mul(u.a, v.b), e_mul(u.b, v.a));
    return r;
}

XY xy_sub(const XY &u, const XY &v) { return XY{ep_sub(u.a, v.a), ep_sub(u.b, v.b)}; }

/* exact division by 2y: (a + by)/(2y) = b/2 + (a/f)(y/2) */
XY xy_div2y(const XY &u, const EPoly &f, const FieldPtr &K) {
    Element half = K->from_rat(Rat(1, 2));
    XY r;
    r.a = ep_scale(half, u.b);
    if (u.a.empty()) {
        r.b = {};
        return r;
    }
    auto qr = e_divrem(u.a, f);
    if (!qr.second.empty()) throw std::logic_error("xy_div2y: not divisible");
    r.b = ep_scale(half, qr.first);
    return r;
}

/* psi_0 .. psi_n for the curve y^2 = x^3 + Ax + B */
std::vector<XY> division_polys(const CurvePtr &E, int n) {
    const FieldPtr &K = E->field;
    Element A = E->A, B = E->B;
    Element z = K->from_rat(0), one = K->from_rat(1);
    EPoly f = {B, A, z, one};
    std::vector<XY> psi(std::max(5, n + 1));
    psi[0] = XY{{}, {}};
    psi[1] = XY{{one}, {}};
    psi[2] = XY{{}, {K->from_rat(2)}};
    psi[3] = XY{{-(A * A), K->from_rat(12) * B, K->from_rat(6) * A, z, K->from_rat(3)}, {}};
    EPoly q4 = {-(K->from_rat(8) * B * B + A * A * A),
                -(K->from_rat(4) * A * B),
                -(K->from_rat(5) * A * A),
                K->from_rat(20) * B,
                K->from_rat(5) * A,
                z,
                one};
    psi[4] = XY{{}, ep_scale(K->from_rat(4), q4)};
    for (int i = 5; i <= n; ++i) {
        if (i % 2 == 1) {
            int m = (i - 1) / 2;
            XY t1 = xy_mul(psi[m + 2], xy_mul(psi[m], xy_mul(psi[m], psi[m], f), f), f);
            XY t2 = xy_mul(psi[m - 1], xy_mul(psi[m + 1], xy_mul(psi[m + 1], psi[m + 1], f), f), f);
            psi[(size_t)i] = xy_sub(t1, t2);
        } else {
            int m = i / 2;
            XY t1 = xy_mul(psi[m + 2], xy_mul(psi[m - 1], psi[m - 1], f), f);
            XY t2 = xy_mul(psi[m - 2], xy_mul(psi[m + 1], psi[m + 1], f), f);
            psi[(size_t)i] = xy_div2y(xy_mul(psi[m], xy_sub(t1, t2), f), f, K);
        }
    }
    return psi;
}

/* all division points D with r D = S, by solving the x-coordinate equation
 * (x - x_S) psi_r^2 = psi_{r-1} psi_{r+1} and verifying exactly */
std::vector<Point> division_points(const CurvePtr &E, const Point &S, int r) {
    const FieldPtr &K = E->field;
    if (r == 1) return {S};
    std::vector<XY> psi = division_polys(E, r + 1);
    EPoly f = {E->B, E->A, K->from_rat(0), K->from_rat(1)};
    XY den = xy_mul(psi[(size_t)r], psi[(size_t)r], f);
    XY num = xy_mul(psi[(size_t)r - 1], psi[(size_t)r + 1], f);
    if (!den.b.empty() || !num.b.empty())
        throw std::logic_error("division_points: x-coordinate data not y-free");
    EPoly shifted = e_mul(EPoly{-S.x, K->from_rat(1)}, den.a);
    EPoly eqn = ep_sub(shifted, num.a);
    std::vector<Point> out;
    if (eqn.empty()) return out;
    for (const Element &x0 : roots_in_field_general(K, eqn)) {
        Element c = curve_rhs(E, x0);
        std::vector<Element> ys;
        if (c.is_zero())
            ys.push_back(K->from_rat(0));
        else
            ys = roots_in_field_general(K, EPoly{-c, K->from_rat(0), K->from_rat(1)});
        for (const Element &y0 : ys) {
            Point D;
            D.infinity = false;
            D.x = x0;
            D.y = y0;
            if (on_curve(E, D) && points_equal(ec_mul(E, r, D), S)) out.push_back(D);
        }
    }
    return out;
}

}  // namespace

CosetDecision coset_membership(const CosetData &data, const Point &Q) {
    const CurvePtr &E = data.curve;
    if (data.r < 1 || data.r > 5) throw domain_error("coset index r out of the supported range");
    if (!on_curve(E, Q)) throw domain_error("query point is not on the curve");
    for (size_t i = 0; i < data.reps.size(); ++i) {
        if (!on_curve(E, data.reps[i])) throw domain_error("coset representative off the curve");
        Point S = ec_add(E, Q, ec_neg(E, data.reps[i]));
        if (S.infinity) {
            CosetDecision d{CosetDecision::Status::member, i, infinity_point()};
            return d;
        }
        std::vector<Point> found = division_points(E, S, data.r);
        if (!found.empty()) {
            CosetDecision d{CosetDecision::Status::member, i, found.front()};
            return d;
        }
    }
    CosetDecision d{CosetDecision::Status::no_witness, 0, infinity_point()};
    return d;
}

}  // namespace diodef
