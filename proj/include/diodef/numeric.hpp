#ifndef DIODEF_NUMERIC_HPP
#define DIODEF_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "diodef/errors.hpp"

namespace diodef {

using Int = mpz_class;
using Rat = mpq_class;

/* floor division (mpz_fdiv), as opposed to the truncating '/' of mpz_class */
inline Int fdiv(const Int &a, const Int &b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int &d, const Int &a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int isqrt_floor(const Int &n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/* smallest integer >= sqrt(n) */
inline Int isqrt_ceil(const Int &n) {
    Int r = isqrt_floor(n);
    if (r * r < n) r += 1;
    return r;
}

/* exact integer square root, or nullopt-like failure via bool */
inline bool perfect_square_root(const Int &n, Int &out) {
    if (n < 0) return false;
    out = isqrt_floor(n);
    return out * out == n;
}

/* rational upper bound for sqrt(q), q >= 0:  sqrt(n/d) = sqrt(n*d)/d <= (ceil sqrt(n*d))/d */
inline Rat sqrt_upper(const Rat &q) {
    if (q < 0) throw domain_error("sqrt_upper: negative input");
    Rat r(isqrt_ceil(q.get_num() * q.get_den()), q.get_den());
    r.canonicalize();
    return r;
}

/* rational lower bound for sqrt(q) */
inline Rat sqrt_lower(const Rat &q) {
    if (q < 0) throw domain_error("sqrt_lower: negative input");
    Rat r(isqrt_floor(q.get_num() * q.get_den()), q.get_den());
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat &q) { return q.get_den() == 1; }

/* decimal-string I/O; rationals print as "p/q" unless the denominator is 1 */
inline std::string to_string(const Int &n) { return n.get_str(); }

inline std::string to_string(const Rat &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string &s) {
    Int n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw usage_error("not a decimal integer: '" + s + "'");
    return n;
}

inline Rat parse_rat(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw usage_error("zero denominator in '" + s + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/* number of decimal digits of |n|; used by the resource budgets */
inline size_t decimal_digits(const Int &n) {
    return mpz_sizeinbase(n.get_mpz_t(), 10);
}

inline size_t decimal_digits(const Rat &q) {
    return decimal_digits(q.get_num()) + decimal_digits(q.get_den());
}

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

}  // namespace diodef

#endif
