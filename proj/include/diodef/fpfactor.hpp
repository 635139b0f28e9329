#ifndef DIODEF_FPFACTOR_HPP
#define DIODEF_FPFACTOR_HPP

#include <memory>
#include <utility>
#include <vector>

#include "diodef/numfield.hpp"

namespace diodef {

/* factorization mod p of the minimal polynomial of one of the field's
 * auxiliary generators (the cached value behind prime splitting) */
struct FpFactorization {
    Int p;
    size_t kd_index = 0;  // which generator was used
    std::vector<std::pair<ZPoly, int>> factors;  // monic lifts in [0,p), multiplicity
};

/* complete monic factorization mod p into irreducibles; canonical factor
 * order (degree, then coefficients); deterministic */
std::vector<std::pair<ZPoly, int>> fp_factor_monic(const ZPoly &f, const Int &p);

/* cached factorization through the first generator whose index is prime to
 * p; throws domain_error when every generator has index divisible by p */
std::shared_ptr<const FpFactorization> kd_factorization(const FieldPtr &K, const Int &p);

}  // namespace diodef

#endif
