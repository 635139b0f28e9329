#ifndef DIODEF_POLYSYS_HPP
#define DIODEF_POLYSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diodef/ideal.hpp"

namespace diodef {

/* graded lexicographic order on exponent vectors, variables in declaration
 * order */
struct MonoLess {
    bool operator()(const std::vector<int> &a, const std::vector<int> &b) const;
};

/* multivariate polynomial; coefficients live in a fixed number field */
struct MultiPoly {
    std::map<std::vector<int>, Element, MonoLess> terms;
};

MultiPoly mp_const(const Element &c, size_t nvars);
MultiPoly mp_var(size_t idx, size_t nvars);
MultiPoly mp_add(const MultiPoly &a, const MultiPoly &b);
MultiPoly mp_sub(const MultiPoly &a, const MultiPoly &b);
MultiPoly mp_neg(const MultiPoly &a);
MultiPoly mp_mul(const MultiPoly &a, const MultiPoly &b);
MultiPoly mp_scale(const Element &c, const MultiPoly &a);
Element mp_eval(const MultiPoly &p, const std::vector<Element> &vals, const FieldPtr &K);
std::vector<size_t> mp_support(const MultiPoly &p);

/* Existential polynomial system over a ring of integers: the defined tuple
 * (parameters) lies in the set iff some assignment of the existential
 * variables zeroes every equation.  Variables take values in O_top;
 * constants are embedded from the base ring. */
struct PolySystem {
    FieldExtension ring;
    std::vector<std::string> parameters;
    std::vector<std::string> existentials;
    std::vector<MultiPoly> equations;
    std::string label;

    std::vector<std::string> variables() const;  // parameters then existentials
    size_t nvars() const { return parameters.size() + existentials.size(); }
};

using Witness = std::map<std::string, Element>;

FieldExtension identity_extension(const FieldPtr &K);

/* {a : exists x, y with (2x-1)(3x-1) = y a}, the nonvanishing trick */
PolySystem emit_nonzero(const FieldExtension &ring);

enum class PredicateKind {
    ideal_membership,
    ideal_divides,
    ideal_equal,
    coprime,
    principal_ratio,
    is_num,
    congruence,
};

const std::vector<PredicateKind> &all_predicate_kinds();
std::string predicate_kind_name(PredicateKind k);
PredicateKind predicate_kind_of(const std::string &name);

/* Ideal arguments are baked in through two-generator representations:
 * membership/congruence take one ideal, the rest two. */
PolySystem emit_predicate(PredicateKind kind, const FieldExtension &ring,
                          const std::vector<Ideal> &ideals);

enum class CombineMode { conjunction, set_union, set_sum };

PolySystem combine(const std::vector<PolySystem> &systems, CombineMode mode);

/* exact evaluation; all variables must be assigned integral values */
bool verify_witness(const PolySystem &sys, const Witness &w);

/* the system re-expressed with one integer-valued variable per integral-basis
 * coordinate, equations expanded through structure constants */
struct ScalarizedSystem {
    PolySystem scalar;  // over the rational field
    FieldExtension source_ring;
    std::vector<std::string> source_vars;
    size_t kappa = 1;
};

ScalarizedSystem scalarize(const PolySystem &sys);
Witness scalarize_witness(const ScalarizedSystem &sc, const Witness &w);
Witness unscalarize_witness(const ScalarizedSystem &sc, const Witness &sw);

/* Deterministic box search over integral-basis coordinate cubes of the given
 * radius, with per-equation pruning; `fixed` pins variables (parameters,
 * usually) before the search. */
std::optional<Witness> search_witness(const PolySystem &sys, long radius,
                                      const Witness &fixed = {});

/* witness builders from the exact ideal solvers (used by tests, the CLI and
 * the hybrid definitions); each fills the variables of the matching
 * emit_predicate / emit_nonzero system and throws when the predicate is
 * false (the solvers' preconditions fail) */
Witness membership_witness(const PolySystem &sys, const Element &a, const Ideal &I);
Witness nonzero_system_witness(const PolySystem &sys, const Element &a);
Witness divides_witness(const PolySystem &sys, const Ideal &I, const Ideal &J);
Witness equal_witness(const PolySystem &sys, const Ideal &I, const Ideal &J);
Witness coprime_witness(const PolySystem &sys, const Ideal &I, const Ideal &J);
/* principal_ratio / is_num at the pair (a, b); the coprimality block is
 * filled exactly when the system carries it */
Witness ratio_witness(const PolySystem &sys, const Element &a, const Element &b,
                      const Ideal &I, const Ideal &J);
Witness congruence_witness(const PolySystem &sys, const Element &a, const Element &b,
                           const Ideal &I);

}  // namespace diodef

#endif
