#ifndef DIODEF_POLY_HPP
#define DIODEF_POLY_HPP

#include <optional>
#include <vector>

#include "diodef/numeric.hpp"

namespace diodef {

/* Univariate polynomials, ascending coefficients, no trailing zeros.
 * ZPoly for defining polynomials, QPoly for the rational workhorse ops.
 */
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

void q_trim(QPoly &p);
void z_trim(ZPoly &p);
inline int q_deg(const QPoly &p) { return (int)p.size() - 1; }  // deg 0-poly = -1
inline int z_deg(const ZPoly &p) { return (int)p.size() - 1; }

QPoly q_poly(const ZPoly &p);
QPoly q_add(const QPoly &a, const QPoly &b);
QPoly q_sub(const QPoly &a, const QPoly &b);
QPoly q_mul(const QPoly &a, const QPoly &b);
QPoly q_scale(const QPoly &a, const Rat &c);
/* (quotient, remainder) with b != 0 */
std::pair<QPoly, QPoly> q_divrem(const QPoly &a, const QPoly &b);
QPoly q_derivative(const QPoly &p);
QPoly q_gcd(QPoly a, QPoly b);  // monic
Rat q_eval(const QPoly &p, const Rat &x);
Int z_eval(const ZPoly &p, const Int &x);

bool is_monic(const ZPoly &p);

/* resultant via the Sylvester matrix (desk-scale degrees) */
Rat q_resultant(const QPoly &a, const QPoly &b);
Int z_discriminant(const ZPoly &p);

/* ---- real root counting (Sturm) ---- */

struct SturmChain {
    std::vector<QPoly> seq;
};
SturmChain sturm_chain(const QPoly &p);
/* number of distinct real roots in (a, b]; requires squarefree input */
int sturm_count(const SturmChain &c, const Rat &a, const Rat &b);
int sturm_count_all(const SturmChain &c);
/* Cauchy bound: all complex roots have |z| <= bound */
Rat root_bound(const ZPoly &p);
/* disjoint isolating intervals (lo, hi] for every real root, each of width <= eps */
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly &p, const Rat &eps);

/* ---- irreducibility over Q (monic integer input) ----
 *
 * Kronecker's method: a monic degree-k integer factor g of monic f satisfies
 * g(t) | f(t) at every integer t, so candidates are interpolated from divisor
 * tuples of f(t_0..t_k) and checked by exact division.  Complete, and cheap
 * for the catalogue degrees.
 */
bool z_irreducible(const ZPoly &f);
/* a monic factor of degree in [1, deg/2] if one exists */
std::optional<ZPoly> z_monic_factor(const ZPoly &f);

std::vector<Int> divisors_of(const Int &n);  // positive divisors, |n| desk scale

}  // namespace diodef

#endif
