#ifndef DIODEF_SHLAPENTOKH_HPP
#define DIODEF_SHLAPENTOKH_HPP

#include <string>
#include <vector>

#include "diodef/galois.hpp"

namespace diodef {

/* subfield of an ambient field F, presented by a primitive element */
struct SubfieldPresentation {
    FieldPtr field;          // the subfield as a field of its own
    Element primitive_in_F;  // the subfield generator, inside F
    ZPoly minpoly;           // minimal polynomial of the generator
    FieldEmbedding emb;      // field -> F, theta -> primitive_in_F
};

/* Complex conjugations of a Galois field F: for each nonreal embedding
 * rho: F -> C the induced automorphism rho^-1 conj rho, matched through
 * certified root boxes and then verified exactly to have order 2.
 * Duplicates are removed; totally real fields give the empty list.
 * Throws on non-Galois input.
 */
std::vector<Automorphism> complex_conjugations(const FieldPtr &F);

/* fixed subfield of an order-2 automorphism, with [F : F^sigma] = 2 */
SubfieldPresentation fixed_field(const Automorphism &sigma);

/* Intersection of subfields of the same ambient F, re-presented by a
 * primitive element.  The empty list yields F itself. */
SubfieldPresentation intersect_subfields(const FieldPtr &F,
                                         const std::vector<SubfieldPresentation> &parts);

/* r2 = 0 in the certified signature */
bool is_totally_real(const FieldPtr &K);

struct ReductionStep {
    std::string kind;  // "base" | "intersection" | "quadratic"
    std::string statement;
    std::string assumed;   // the input this step leans on; empty = proved here
    int sigma_index = -1;  // which conjugation, for quadratic steps
    /* side conditions recorded by the restricted-input variant */
    std::vector<std::string> conditions;
    std::vector<std::string> violations;
};

/* Decomposition of "Z is diophantine in O_F" into a totally real base,
 * an intersection of fixed rings, and one degree-2 descent per complex
 * conjugation.  All degree and fixed-point claims are verified exactly;
 * the base and the degree-2 inputs stay marked as assumptions. */
struct ReductionPlan {
    FieldPtr field;
    std::vector<Automorphism> conjugations;
    std::vector<SubfieldPresentation> fixed_fields;
    SubfieldPresentation intersection;
    std::vector<ReductionStep> steps;
    bool l0_variant = false;
};

ReductionPlan plan(const FieldPtr &F);

/* Same skeleton, but each degree-2 step additionally records the side
 * conditions under which the restricted degree-2 input is known (the base
 * field embeds in R, the top field is Galois over Q and contains
 * Q(sqrt(-1), sqrt(5), sqrt(7), sqrt(11), sqrt(13), sqrt(17), sqrt(19))),
 * flagging any that fail.  The compositum witnessing the last condition is
 * never constructed; containment is tested root by root. */
ReductionPlan plan_L0_variant(const FieldPtr &F);

}  // namespace diodef

#endif
