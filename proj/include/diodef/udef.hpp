#ifndef DIODEF_UDEF_HPP
#define DIODEF_UDEF_HPP

#include "diodef/ec.hpp"
#include "diodef/forcing.hpp"
#include "diodef/polysys.hpp"

namespace diodef {

/* Oracle-mediated checkers accept only on exactly verified certificates; an
 * oracle that cannot produce one reports inconclusive, never a false
 * acceptance. */
enum class HybridStatus { accepted, not_accepted, inconclusive };
std::string hybrid_status_name(HybridStatus s);

/* U = {1..n} joined with the alpha admitting k, s in the curve's
 * approximation set with (alpha-1)...(alpha-n) | num(s) and
 * alpha = k mod num(s).  The congruence lemma squeezes U between the
 * rational integers and O_K. */
struct UDefinition {
    FieldExtension ext;  // base K inside Galois L
    CurvePtr curve;      // over K; its t-ratios form the set S
    ForcingParams params;
    long digit_budget = 100000;
};

UDefinition emit_U(const FieldExtension &ext, const CurvePtr &curve,
                   long digit_budget = 100000);

/* polynomial pieces of one accepted alpha, each with a verified witness:
 * the two oracle outputs s, k are in K, everything downstream is an emitted
 * predicate over O_K or O_L */
struct USeams {
    Element s, k;        // t-ratios supplied by the curve oracle
    Element beta;        // contracted product (alpha-1)...(alpha-n)
    Ideal num_s, den_s;  // over K
    std::optional<Ideal> cong_num, cong_den;  // num/den of alpha - k over L
    PolySystem divides_sys;  // (beta) | num_s
    Witness divides_w;
    PolySystem numext_sys;  // num_s = num(s)
    Witness numext_w;
    /* the congruence alpha = k mod num_s: a single congruence system when k
     * is integral, otherwise num extraction of alpha - k plus a divisibility
     * system */
    std::vector<PolySystem> cong_sys;
    std::vector<Witness> cong_w;
};

struct UCheck {
    HybridStatus status = HybridStatus::inconclusive;
    std::string reason;
    bool trivial_branch = false;  // alpha in {1..n}
    long branch_j = 0;
    std::optional<USeams> seams;  // oracle-path acceptances
    std::optional<ForcingInstance> instance;  // the lemma instance realized
    long refutation_candidates = 0;  // instances scanned for a rejection
};

UCheck u_check(const UDefinition &U, const Element &alpha);

/* O_K = sum of U b_i over the integral basis of O_K */
struct OKDefinition {
    UDefinition u;
    std::vector<Element> basis;  // integral basis of the base field
};

OKDefinition emit_OK(const UDefinition &u);

struct OKCheck {
    HybridStatus status = HybridStatus::inconclusive;
    std::string reason;
    std::vector<Int> coords;  // gamma in the O_K integral basis
    std::vector<UCheck> components;
};

OKCheck ok_check(const OKDefinition &def, const Element &gamma);

/* Membership of Q in union(rep + r E(L)), emitted in the weighted chart
 * x = X/W^2, y = Y/W^3: every group-law step is a polynomial identity and
 * every denominator condition becomes a W != 0 or H != 0 guard through the
 * nonzero trick.  The chart covers affine queries and division points;
 * excluded configurations are listed in notes. */
struct CosetEmission {
    CosetData data;
    std::vector<PolySystem> per_rep;  // one chart per representative
    PolySystem sys;                   // union over representatives
    std::vector<std::string> notes;
};

CosetEmission emit_coset_membership(const CosetData &data);

/* witness for affine Q = rep + r Z, Z affine with a degeneracy-free chain */
Witness coset_witness(const CosetEmission &em, size_t rep_index, const Point &Q,
                      const Point &Z);

}  // namespace diodef

#endif
