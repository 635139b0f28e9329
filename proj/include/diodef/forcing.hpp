#ifndef DIODEF_FORCING_HPP
#define DIODEF_FORCING_HPP

#include <cstdint>

#include "diodef/ideal.hpp"

namespace diodef {

/* |Aut(K)| == [K:Q], memoized per field */
bool is_galois(const FieldPtr &K);

struct ForcingParams {
    long ell = 0;
    long n = 0;
};

/* minimal n with n > 23 ell, 10^(n-2 ell) > (4n)^ell and the stricter
 * 10^(n-20 ell) > (4n)^ell; exact integer arithmetic */
ForcingParams compute_n(long ell);
bool params_valid(const ForcingParams &p);

struct ForcingInstance {
    FieldExtension ext;  // base K inside Galois top L
    Element alpha;       // in O_L
    Ideal modulus;       // over K
    Element k;           // in K
    ForcingParams params;
};

void validate_instance(const ForcingInstance &inst);

/* (alpha-1)...(alpha-n) divides modulus O_L, and alpha = k mod modulus */
bool check_hypotheses(const ForcingInstance &inst);

enum class ForcingVerdict { hypotheses_fail, alpha_in_base, counterexample };
const char *verdict_name(ForcingVerdict v);

ForcingVerdict forcing_conclusion(const ForcingInstance &inst);

struct FuzzReport {
    long trials = 0;            // (alpha, I, k) instances
    long alphas = 0;            // distinct alpha draws
    long hypotheses_fail = 0;
    long alpha_in_base = 0;
    long counterexample = 0;
    long full_path_checks = 0;  // instances rerun through the complete pipeline
};

/* Randomized search for counterexamples to the forcing conclusion over
 * K = Q: alpha ranges over O_L \ O_K of bounded height, I over divisors
 * (norm <= norm_bound) of the contraction of the product ideal, k over
 * residues mod I.  The divisibility hypothesis does not involve k, so for
 * each (alpha, I) it is evaluated once exactly and shared across the k row;
 * a few instances per row additionally rerun the whole pipeline.
 * Deterministic for a fixed seed, independent of the job count. */
FuzzReport forcing_fuzz(const FieldPtr &L, long trials, long height_bound,
                        const Int &norm_bound, uint64_t seed, int jobs = 1);

}  // namespace diodef

#endif
