#ifndef DIODEF_ROOTS_HPP
#define DIODEF_ROOTS_HPP

#include <vector>

#include "diodef/poly.hpp"

namespace diodef {

/* exact complex rational */
struct QC {
    Rat re, im;
    QC() : re(0), im(0) {}
    QC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
};

QC qc_add(const QC &a, const QC &b);
QC qc_sub(const QC &a, const QC &b);
QC qc_mul(const QC &a, const QC &b);
QC qc_conj(const QC &a);
Rat qc_abs2(const QC &a);
/* exact evaluation of a rational-coefficient polynomial */
QC qc_eval(const QPoly &p, const QC &z);

/* A certified isolating disk: contains exactly one root of the polynomial.
 * Centers are exact rationals (dyadic, from the float solver), radii are
 * rational upper bounds obtained from the classical inequality
 *   min_i |c - r_i| <= deg * |f(c)/f'(c)|,
 * evaluated in exact arithmetic, plus pairwise disjointness.
 */
struct RootBox {
    QC center;
    Rat radius;
    bool real = false;
};

struct RootSet {
    ZPoly poly;
    std::vector<RootBox> roots;      // canonical order: (re, im) certified compare
    std::vector<size_t> conj;        // conj[i] = index of complex conjugate root
    int r1 = 0, r2 = 0;              // signature
    long precision_bits = 0;
};

/* Isolate all complex roots of a monic squarefree integer polynomial with
 * certified disjoint disks of radius < 2^-min_bits.  Deterministic.
 */
RootSet isolate_roots(const ZPoly &f, long min_bits = 64);

/* exact interval evaluation: g at the root inside box i; returns the exact
 * value at the center plus a Lipschitz error radius valid on the whole disk */
struct QCInterval {
    QC value;
    Rat err;
};
QCInterval eval_at_root(const RootSet &rs, const QPoly &g, size_t i);

/* Uncertified float root approximations (Durand-Kerner at the given working
 * precision) of a monic complex polynomial, coefficients ascending.  Returned
 * values are the exact rationals of the computed floats.  Deterministic. */
std::vector<QC> approx_complex_roots(const std::vector<QC> &monic, long prec);

}  // namespace diodef

#endif
