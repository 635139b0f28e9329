#ifndef DIODEF_IDEAL_HPP
#define DIODEF_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "diodef/galois.hpp"
#include "diodef/numfield.hpp"

namespace diodef {

/* Nonzero integral ideal of O_K as the canonical row-HNF basis of its
 * coordinate lattice (integral-basis coordinates).  The zero ideal is not
 * representable; constructors reject it. */
struct Ideal {
    FieldPtr field;
    ZMat hnf;  // d x d, upper triangular, positive diagonal

    Int norm() const;
    bool is_unit() const;
    bool contains(const Element &a) const;
    bool operator==(const Ideal &o) const;
    bool operator!=(const Ideal &o) const { return !(*this == o); }
};

/* integral coordinates of an integral element, as integers */
IVec int_coords(const Element &a);

Ideal unit_ideal(const FieldPtr &K);
Ideal principal_ideal(const Element &a);
Ideal ideal_from_gens(const FieldPtr &K, const std::vector<Element> &gens);
/* rows are integral-basis coordinates of lattice generators; the lattice is
 * verified to be an O_K-module */
Ideal ideal_from_rows(const FieldPtr &K, const ZMat &rows);

Ideal ideal_mul(const Ideal &a, const Ideal &b);
Ideal ideal_sum(const Ideal &a, const Ideal &b);
Ideal ideal_intersect(const Ideal &a, const Ideal &b);
Ideal ideal_pow(const Ideal &a, int e);
/* does a divide b, i.e. b subset of a */
bool ideal_divides(const Ideal &a, const Ideal &b);
bool ideals_coprime(const Ideal &a, const Ideal &b);
/* (a : b) = { x in O_K : x b subset of a } */
Ideal ideal_colon(const Ideal &a, const Ideal &b);

/* (i1, i2) with (i1, i2) = I and i1 = norm(I); deterministic shell search
 * for i2 */
std::pair<Element, Element> two_element_rep(const Ideal &I);
/* write a = x i1 + y i2 with x, y integral (a must lie in (i1, i2)) */
std::pair<Element, Element> solve_membership(const Element &a, const Element &i1,
                                             const Element &i2);
/* u in I, v in J with u + v = 1 (I, J coprime) */
std::pair<Element, Element> solve_coprime(const Ideal &I, const Ideal &J);

/* canonical representative of a modulo I (HNF box coordinates) */
Element reduce_mod(const Element &a, const Ideal &I);
/* all residues of O_K mod I, canonical order; refuses norms above the cap */
std::vector<Element> residues(const Ideal &I, const Int &cap = Int(1000000));
std::optional<Element> inverse_mod(const Element &a, const Ideal &I);
Element crt(const std::vector<std::pair<Element, Ideal>> &pairs);

struct PrimeIdeal {
    Ideal ideal;
    Int p;  // residue characteristic
    int f;  // residue degree
};

struct PrimeFactorization {
    std::vector<std::pair<PrimeIdeal, int>> factors;  // (prime, exponent)
};

/* Kummer-Dedekind through a cached catalogue generator whose index is prime
 * to every p dividing the norm; unsupported primes raise domain_error */
PrimeFactorization factor(const Ideal &I);
int valuation(const Ideal &I, const Ideal &P);
/* deterministic rational integer factorization (trial division + rho) */
std::vector<std::pair<Int, int>> int_factor(Int n);

std::pair<Ideal, Ideal> num_den(const Element &a);

struct FractionalIdeal {
    Ideal numerator_lattice;
    Int denominator;  // positive, minimal
};
FractionalIdeal fractional_of(const Element &a);

/* x with (2x-1)(3x-1) in I: invert 2 modulo the part of I coprime to 2 and
 * 3 modulo the dyadic part, then glue by crt; the split needs no
 * factorization */
Element solve_vanishing_product(const Ideal &I);
/* (x, y) with (2x-1)(3x-1) = y a exactly */
std::pair<Element, Element> nonzero_witness(const Element &a);

struct FieldExtension {
    FieldPtr base, top;
    FieldEmbedding emb;
    int relative_degree = 1;
};
FieldExtension make_extension(const FieldPtr &base, const FieldPtr &top);
FieldExtension make_extension(const FieldEmbedding &emb);
Ideal extend_ideal(const Ideal &I, const FieldExtension &ext);
/* I O_L | num(alpha - beta); alpha, beta in L, I over the base field */
bool congruent_mod(const Element &alpha, const Element &beta, const Ideal &I,
                   const FieldExtension &ext);

}  // namespace diodef

#endif
