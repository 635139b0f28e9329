#ifndef DIODEF_NUMFIELD_HPP
#define DIODEF_NUMFIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "diodef/linalg.hpp"
#include "diodef/poly.hpp"

namespace diodef {

struct NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/* Element of a number field, stored in power-basis coordinates of the
 * defining root theta.  All user-facing encodings (CLI, JSON, witnesses)
 * use integral-basis coordinates instead; see integral_coords / from_integral.
 */
struct Element {
    FieldPtr field;
    QVec pow;  // length = degree

    Element() = default;
    Element(FieldPtr f, QVec coords) : field(std::move(f)), pow(std::move(coords)) {}

    bool is_zero() const;
    bool operator==(const Element &o) const;
    bool operator!=(const Element &o) const { return !(*this == o); }
};

Element operator+(const Element &a, const Element &b);
Element operator-(const Element &a, const Element &b);
Element operator-(const Element &a);
Element operator*(const Element &a, const Element &b);
Element operator*(const Rat &c, const Element &a);
Element operator/(const Element &a, const Element &b);
Element inverse(const Element &a);
Element pow_int(const Element &a, const Int &e);

Rat trace(const Element &a);
Rat norm(const Element &a);
/* monic minimal polynomial over Q */
QPoly min_poly(const Element &a);

/* mod-p factorization of a KD generator's minimal polynomial (cache value) */
struct FpFactorization;

/* auxiliary generator used by prime factorization: gamma generates the field
 * and primes p with p coprime to [O_K : Z[gamma]] factor Kummer-Dedekind
 * style through gamma's minimal polynomial */
struct KdGenerator {
    Element gamma;
    ZPoly gamma_min_poly;
    Int index;  // [O_K : Z[gamma]]
};

struct NumberField {
    ZPoly poly;     // monic irreducible integer polynomial
    size_t degree = 0;
    QMat basis;     // rows = integral basis in power coords; basis[0] = 1
    QMat basis_inv; // right-inverse: integral coords = pow * basis_inv
    Int disc;       // det of the trace form on the basis
    ZMat power_reduction;            // theta^(d+k), k = 0..d-2, power coords
    std::vector<std::vector<IVec>> structure;  // b_i*b_j in integral coords
    std::vector<KdGenerator> kd_gens;
    std::string name;

    mutable std::mutex cache_mutex;
    mutable std::map<Int, std::shared_ptr<const FpFactorization>> kd_cache;

    Element zero() const;
    Element one() const;
    Element theta() const;
    Element from_rat(const Rat &q) const;
    Element from_pow(QVec coords) const;
    /* element from integral-basis coordinates */
    Element from_integral(const QVec &coords) const;
    FieldPtr self() const { return self_; }

    mutable FieldPtr self_;  // set by make_field
};

/* Construct and fully verify a field.  With no basis supplied the integral
 * basis must come from the built-in catalogue (Q, quadratics by the usual
 * D mod 4 case split, and the listed cubic/quartic entries); a supplied basis
 * is verified, never trusted.  Throws domain_error on reducible polynomials,
 * non-invariant bases, or unknown fields.
 */
FieldPtr make_field(const ZPoly &poly, std::optional<QMat> basis = std::nullopt,
                    const std::string &name = "");

/* named catalogue lookup ("rat", "gauss", "sqrt2", ..., "gauss_sqrt2") */
FieldPtr field_by_name(const std::string &name);
std::vector<std::string> catalogue_field_names();

bool same_field(const FieldPtr &a, const FieldPtr &b);
void require_same_field(const Element &a, const Element &b);

/* integral-basis coordinates of a (exact); element lies in O_K iff all
 * coordinates are integers */
QVec integral_coords(const Element &a);
bool is_integral(const Element &a);

/* multiplication-by-a matrix in the power basis (row j = coords of a*theta^j) */
QMat mult_matrix(const Element &a);

}  // namespace diodef

#endif
