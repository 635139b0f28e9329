#ifndef DIODEF_SERIALIZE_HPP
#define DIODEF_SERIALIZE_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diodef/ec.hpp"
#include "diodef/forcing.hpp"
#include "diodef/shlapentokh.hpp"
#include "diodef/udef.hpp"

namespace diodef {

/* Key order is emission order, so every writer below is canonical: the same
 * value always dumps to the same bytes.  Integers are decimal strings,
 * rationals "p" or "p/q", elements integral-basis coordinate lists. */
using Json = nlohmann::ordered_json;

std::string json_text(const Json &j);  // 2-space indent, newline-terminated
Json parse_text(const std::string &text);
Json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const Json &j);

Json json_of(const Int &n);
Json json_of(const Rat &q);
Int parse_int(const Json &j);
Rat parse_rat(const Json &j);

Json json_of(const ZPoly &p);  // ascending coefficients
ZPoly parse_zpoly(const Json &j);

Json json_of(const FieldPtr &K);  // {name, defining_poly, integral_basis}
FieldPtr parse_field(const Json &j);

Json coords_json(const Element &a);  // bare coordinate list
Element element_from_coords(const FieldPtr &K, const Json &coords);
Json json_of(const Element &a);  // {field, coords}
Element parse_element(const Json &j, const FieldPtr &K);

Json json_of(const Ideal &I);  // {field, hnf}
Ideal parse_ideal(const Json &j, const FieldPtr &K);
Json json_of(const FractionalIdeal &I);

Json json_of(const CurvePtr &E);
using FieldResolver = std::function<FieldPtr(const std::string &)>;
CurvePtr parse_curve(const Json &j, const FieldResolver &resolve);

Json json_of(const FieldExtension &ext);
FieldExtension parse_extension(const Json &j);

Json json_of(const PolySystem &sys);
PolySystem parse_polysystem(const Json &j);

Json json_of_witness(const Witness &w);
Witness parse_witness(const Json &j, const FieldPtr &K);

Json json_of(const ForcingParams &p);
Json json_of(const ForcingInstance &inst);
Json json_of(const FuzzReport &r);
Json json_of(const ApproxResult &r);
Json json_of(const NumeratorResult &r);
Json json_of(const SubfieldPresentation &s);
Json json_of(const ReductionPlan &p);
Json json_of(const USeams &s);
Json json_of(const UCheck &c);
Json json_of(const OKCheck &c);

/* catalogue files; every entry is rebuilt through the verifying constructors */
std::vector<FieldPtr> load_field_catalogue(const std::string &path);
std::vector<CurvePtr> load_curve_catalogue(const std::string &path,
                                           const FieldResolver &resolve);

}  // namespace diodef

#endif
