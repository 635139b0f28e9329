#include <mutex>

#include "diodef/numfield.hpp"

namespace diodef {

/* Built-in integral bases.  Quadratics x^2 - D use the standard D mod 4 case
 * split; the listed cubics/quartics carry hand-checked bases (verified again
 * on every construction: make_field re-derives closure and the discriminant).
 */

struct CatalogueBasis {
    ZPoly poly;
    QMat basis;
};

static std::vector<CatalogueBasis> basis_table() {
    auto R = [](long n, long d) { return Rat(n, d); };
    std::vector<CatalogueBasis> t;
    /* x^3 - 2, x^3 - 3: power basis (index 1) */
    t.push_back({{-2, 0, 0, 1}, q_identity(3)});
    t.push_back({{-3, 0, 0, 1}, q_identity(3)});
    /* x^4+x^3+x^2+x+1: Z[zeta_5] */
    t.push_back({{1, 1, 1, 1, 1}, q_identity(4)});
    /* x^4 - 2x^2 + 9, theta = i + sqrt2; O = Z[zeta_8] via
     * zeta_8 = (-3 + 5 theta + 3 theta^2 - theta^3)/12 */
    t.push_back({{9, 0, -2, 0, 1},
                 {{R(1, 1), R(0, 1), R(0, 1), R(0, 1)},
                  {R(-1, 4), R(5, 12), R(1, 4), R(-1, 12)},
                  {R(0, 1), R(1, 6), R(0, 1), R(1, 6)},
                  {R(-1, 4), R(-5, 12), R(1, 4), R(1, 12)}}});
    /* x^4 - 10x^2 + 1, theta = sqrt2 + sqrt3; basis 1, sqrt2, sqrt3,
     * (sqrt2 + sqrt6)/2 */
    t.push_back({{1, 0, -10, 0, 1},
                 {{R(1, 1), R(0, 1), R(0, 1), R(0, 1)},
                  {R(0, 1), R(-9, 2), R(0, 1), R(1, 2)},
                  {R(0, 1), R(11, 2), R(0, 1), R(-1, 2)},
                  {R(-5, 4), R(-9, 4), R(1, 4), R(1, 4)}}});
    return t;
}

static bool squarefree_int(const Int &n) {
    Int m = abs(n);
    if (m == 0) return false;
    if (m > 100000000) throw domain_error("squarefree test beyond desk scale");
    for (Int p = 2; p * p <= m; p++) {
        if (!divides(p, m)) continue;
        m /= p;
        if (divides(p, m)) return false;
    }
    return true;
}

QMat builtin_basis_for(const ZPoly &poly) {
    size_t d = z_deg(poly);
    if (d == 1) return q_identity(1);
    for (const auto &e : basis_table())
        if (e.poly == poly) return e.basis;
    if (d == 2 && poly[1] == 0) {
        Int D = -poly[0];
        if (D != 0 && D != 1 && squarefree_int(D)) {
            Int m = ((D % 4) + 4) % 4;
            if (m == 1)
                return {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
            return q_identity(2);
        }
    }
    throw domain_error("no catalogue integral basis for this polynomial; supply one");
}

struct NamedField {
    const char *name;
    ZPoly poly;
};

static const std::vector<NamedField> &named_fields() {
    static const std::vector<NamedField> t = {
        {"rat", {-1, 1}},
        {"gauss", {1, 0, 1}},
        {"sqrt2", {-2, 0, 1}},
        {"sqrt3", {-3, 0, 1}},
        {"sqrt5", {-5, 0, 1}},
        {"cbrt2", {-2, 0, 0, 1}},
        {"cbrt3", {-3, 0, 0, 1}},
        {"zeta5", {1, 1, 1, 1, 1}},
        {"gauss_sqrt2", {9, 0, -2, 0, 1}},
        {"sqrt2_sqrt3", {1, 0, -10, 0, 1}},
    };
    return t;
}

FieldPtr field_by_name(const std::string &name) {
    static std::mutex mx;
    static std::map<std::string, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto &nf : named_fields()) {
        if (name == nf.name) {
            FieldPtr f = make_field(nf.poly, std::nullopt, name);
            cache[name] = f;
            return f;
        }
    }
    throw domain_error("unknown catalogue field '" + name + "'");
}

std::vector<std::string> catalogue_field_names() {
    std::vector<std::string> names;
    for (const auto &nf : named_fields()) names.push_back(nf.name);
    return names;
}

}  // namespace diodef
