#ifndef DIODEF_EC_HPP
#define DIODEF_EC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diodef/ideal.hpp"

namespace diodef {

struct EllipticCurve;
using CurvePtr = std::shared_ptr<const EllipticCurve>;

struct Point {
    bool infinity = true;
    Element x, y;
};

/* unverified bookkeeping: the ambient field and index used in the rank
 * stability hypothesis */
struct RankNote {
    std::string top_field;
    int index = 1;
};

struct EllipticCurve {
    FieldPtr field;
    Element A, B;  // y^2 = x^3 + A x + B
    Point generator;
    std::optional<RankNote> rank_note;
    std::string name;
    Element disc;  // -16 (4A^3 + 27B^2)
};

/* verifies nonsingularity, the on-curve identity, and that the generator is
 * not torsion of order <= 12 */
CurvePtr make_curve(const FieldPtr &K, const Element &A, const Element &B, const Element &gx,
                    const Element &gy, std::optional<RankNote> note = std::nullopt,
                    const std::string &name = "");
CurvePtr curve_by_name(const std::string &name);
std::vector<std::string> catalogue_curve_names();

Point infinity_point();
/* verified affine point */
Point make_point(const CurvePtr &E, const Element &x, const Element &y);
bool on_curve(const CurvePtr &E, const Point &P);
bool points_equal(const Point &a, const Point &b);

Point ec_neg(const CurvePtr &E, const Point &P);
Point ec_add(const CurvePtr &E, const Point &P, const Point &Q);
/* double-and-add; digit_budget caps the decimal size of intermediate
 * coordinates (resource_error beyond) */
Point ec_mul(const CurvePtr &E, const Int &m, const Point &P, long digit_budget = 100000);

/* t(P) = -x/y, the local parameter at the identity */
Element uniformizer_at(const CurvePtr &E, const Point &P);
long element_digits(const Element &a);
long point_digits(const Point &P);

/* ---- reduction mod a good prime ---- */

struct ResidueCurve {
    CurvePtr curve;
    PrimeIdeal prime;
    Element A, B;  // canonical residue representatives
};

struct RPoint {
    bool infinity = true;
    Element x, y;  // canonical residue representatives
};

/* residue characteristic not 2 or 3, prime to the denominators and
 * discriminant */
bool good_reduction(const CurvePtr &E, const PrimeIdeal &p);
ResidueCurve make_residue_curve(const CurvePtr &E, const PrimeIdeal &p);
RPoint rc_reduce_point(const ResidueCurve &rc, const Point &P);
RPoint rc_add(const ResidueCurve &rc, const RPoint &a, const RPoint &b);
RPoint rc_mul(const ResidueCurve &rc, const Int &m, const RPoint &a);
/* brute-force point count of the residue curve (residue fields capped at
 * 10^4 points) */
Int rc_group_order(const ResidueCurve &rc);
Int rc_point_order(const ResidueCurve &rc, const RPoint &a);

/* order of the reduction of P */
Int reduction_order(const CurvePtr &E, const Point &P, const PrimeIdeal &p);

/* v_p of a nonzero field element through num/den ideals */
int element_valuation(const Element &a, const PrimeIdeal &p);

struct KernelCertificate {
    Int multiplier;                              // R = multiplier * P
    std::vector<std::pair<PrimeIdeal, int>> vals;  // certified v_p(t(R))
};

/* R = m P in the kernel of reduction at every prime of the modulus, deep
 * enough that v_p(t(R)) >= depth_p (default 1); certified valuations */
std::pair<Point, KernelCertificate> kernel_point(const CurvePtr &E, const Point &P,
                                                 const Ideal &modulus,
                                                 const std::vector<int> &depths = {},
                                                 long digit_budget = 100000);

struct ApproxResult {
    Element s;
    Int k;
    Ideal modulus;
    Int multiplier;  // R = multiplier * generator
    int deepenings = 0;
};

/* s = t(kR)/t(R) with modulus | num(s-k), verified exactly */
ApproxResult approximate(const CurvePtr &E, const Int &k, const Ideal &modulus,
                         long digit_budget = 100000);

struct NumeratorResult {
    Element s;
    Element beta;
    Int r_mult;  // R = r_mult * generator
    Int q_mult;  // Q = q_mult * R
};

/* s = t(Q)/t(R) with (beta) | num(s), verified exactly */
NumeratorResult numerator_witness(const CurvePtr &E, const Element &beta,
                                  long digit_budget = 100000);

/* ---- E(K) as a finite union of cosets of r E(L) ---- */

struct CosetData {
    CurvePtr curve;  // over L
    std::vector<Point> reps;
    int r = 1;
};

struct CosetDecision {
    enum class Status { member, no_witness } status;
    size_t rep_index = 0;   // valid for member
    Point division_point;   // D with r D = Q - rep
};

/* Membership of Q in union(rep + r E(L)).  A member verdict carries an
 * exactly verified division point; no_witness means the bounded search found
 * none (never a false accept). */
CosetDecision coset_membership(const CosetData &data, const Point &Q);

}  // namespace diodef

#endif
