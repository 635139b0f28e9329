#ifndef DIODEF_GALOIS_HPP
#define DIODEF_GALOIS_HPP

#include <optional>
#include <vector>

#include "diodef/numfield.hpp"
#include "diodef/roots.hpp"

namespace diodef {

/* univariate polynomials with coefficients in a number field, ascending */
using EPoly = std::vector<Element>;

int e_deg(const EPoly &p);
void e_trim(EPoly &p);
EPoly e_from_q(const FieldPtr &K, const QPoly &g);
EPoly e_derivative(const EPoly &p);
Element e_eval(const EPoly &p, const Element &x);
EPoly e_mul(const EPoly &a, const EPoly &b);
/* division with remainder; divisor must have invertible leading coefficient */
std::pair<EPoly, EPoly> e_divrem(const EPoly &a, const EPoly &b);
/* monic gcd */
EPoly e_gcd(EPoly a, EPoly b);

/* Best rational approximation of x within eps whose denominator stays below
 * den_bound (continued-fraction convergents); nullopt when no convergent
 * qualifies. */
std::optional<Rat> rational_reconstruct(const Rat &x, const Rat &eps, const Int &den_bound);

/* All roots of g in K, exactly.  The search runs per complex embedding of K
 * (conjugation-consistent assignments of numeric roots, exact linear solve
 * against the embedding Vandermonde, rational reconstruction) but every
 * returned element is verified by exact evaluation g(x) = 0 in K, so the
 * result can never contain a non-root.  Output in a canonical order. */
std::vector<Element> roots_in_field(const FieldPtr &K, const QPoly &g);
std::vector<Element> roots_in_field_general(const FieldPtr &K, const EPoly &g);

/* field automorphism, determined by the image of theta */
struct Automorphism {
    Element image;
    QMat matrix;  // row k = power coords of image^k; a -> a.pow * matrix
};

Automorphism make_automorphism(const Element &image);
Element apply_automorphism(const Automorphism &tau, const Element &a);
/* x -> a(b(x)) */
Automorphism compose(const Automorphism &a, const Automorphism &b);
bool automorphism_is_identity(const Automorphism &tau);
int automorphism_order(const Automorphism &tau);
/* all automorphisms of K (= roots of the defining polynomial inside K),
 * identity first, then canonical element order */
std::vector<Automorphism> automorphisms(const FieldPtr &K);

/* pi with root_j of f mapped to root_pi(j): the certified index of the box
 * containing g(root_j).  Requires that each g(root_j) is again a root of f. */
std::vector<size_t> root_permutation(const ZPoly &f, const QPoly &g);

/* embedding of one catalogue field into another, determined by the image of
 * the source theta */
struct FieldEmbedding {
    FieldPtr src, dst;
    Element image;    // in dst
    QMat pow_matrix;  // src.degree x dst.degree; row k = power coords of image^k
};

FieldEmbedding make_field_embedding(const FieldPtr &src, const Element &image);
/* every embedding src -> dst, canonical order */
std::vector<FieldEmbedding> embeddings_into(const FieldPtr &src, const FieldPtr &dst);
/* first embedding if one exists */
std::optional<FieldEmbedding> find_embedding(const FieldPtr &src, const FieldPtr &dst);
Element embed_element(const FieldEmbedding &e, const Element &a);
/* preimage under e when b lies in the image subfield */
std::optional<Element> contract_element(const FieldEmbedding &e, const Element &b);

}  // namespace diodef

#endif
