#include "diodef/serialize.hpp"

#include <fstream>
#include <sstream>

#include "diodef/errors.hpp"

namespace diodef {

std::string json_text(const Json &j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw usage_error(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void save_json_file(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write " + path);
    out << json_text(j);
}

Json json_of(const Int &n) { return n.get_str(); }

Json json_of(const Rat &q) { return q.get_str(); }

Int parse_int(const Json &j) {
    if (!j.is_string()) throw usage_error("integer fields are decimal strings");
    try {
        return Int(j.get<std::string>());
    } catch (const std::invalid_argument &) {
        throw usage_error("not a decimal integer: " + j.get<std::string>());
    }
}

Rat parse_rat(const Json &j) {
    if (!j.is_string()) throw usage_error("rational fields are \"p\" or \"p/q\" strings");
    std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw usage_error("zero denominator in " + s);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument &) {
        throw usage_error("not a rational: " + s);
    }
}

Json json_of(const ZPoly &p) {
    Json a = Json::array();
    for (const Int &c : p) a.push_back(json_of(c));
    return a;
}

ZPoly parse_zpoly(const Json &j) {
    if (!j.is_array()) throw usage_error("polynomial is an ascending coefficient array");
    ZPoly p;
    for (const Json &c : j) p.push_back(parse_int(c));
    return p;
}

Json json_of(const FieldPtr &K) {
    Json j;
    j["name"] = K->name;
    j["defining_poly"] = json_of(K->poly);
    Json basis = Json::array();
    for (const QVec &row : K->basis) {
        Json r = Json::array();
        for (const Rat &x : row) r.push_back(json_of(x));
        basis.push_back(r);
    }
    j["integral_basis"] = basis;
    return j;
}

FieldPtr parse_field(const Json &j) {
    if (!j.is_object() || !j.contains("defining_poly"))
        throw usage_error("field entries need name, defining_poly, integral_basis");
    std::string name = j.value("name", std::string());
    ZPoly poly = parse_zpoly(j.at("defining_poly"));
    std::optional<QMat> basis;
    if (j.contains("integral_basis")) {
        QMat b;
        for (const Json &row : j.at("integral_basis")) {
            QVec r;
            for (const Json &x : row) r.push_back(parse_rat(x));
            b.push_back(r);
        }
        basis = b;
    }
    return make_field(poly, basis, name);
}

Json coords_json(const Element &a) {
    Json c = Json::array();
    for (const Rat &x : integral_coords(a)) c.push_back(json_of(x));
    return c;
}

Element element_from_coords(const FieldPtr &K, const Json &coords) {
    if (!coords.is_array() || coords.size() != K->degree)
        throw usage_error("element needs " + std::to_string(K->degree) +
                          " integral-basis coordinates");
    QVec v;
    for (const Json &x : coords) v.push_back(parse_rat(x));
    return K->from_integral(v);
}

Json json_of(const Element &a) {
    Json j;
    j["field"] = a.field->name;
    j["coords"] = coords_json(a);
    return j;
}

Element parse_element(const Json &j, const FieldPtr &K) {
    if (!j.is_object() || !j.contains("coords")) throw usage_error("element needs coords");
    std::string fname = j.value("field", std::string());
    if (!fname.empty() && !K->name.empty() && fname != K->name)
        throw usage_error("element field " + fname + " does not match " + K->name);
    return element_from_coords(K, j.at("coords"));
}

static Json hnf_json(const ZMat &m) {
    Json rows = Json::array();
    for (const IVec &row : m) {
        Json r = Json::array();
        for (const Int &x : row) r.push_back(json_of(x));
        rows.push_back(r);
    }
    return rows;
}

static ZMat parse_hnf(const Json &j) {
    if (!j.is_array()) throw usage_error("hnf is an array of integer rows");
    ZMat m;
    for (const Json &row : j) {
        IVec r;
        for (const Json &x : row) r.push_back(parse_int(x));
        m.push_back(r);
    }
    return m;
}

Json json_of(const Ideal &I) {
    Json j;
    j["field"] = I.field->name;
    j["hnf"] = hnf_json(I.hnf);
    return j;
}

Ideal parse_ideal(const Json &j, const FieldPtr &K) {
    if (!j.is_object() || !j.contains("hnf")) throw usage_error("ideal needs hnf rows");
    std::string fname = j.value("field", std::string());
    if (!fname.empty() && !K->name.empty() && fname != K->name)
        throw usage_error("ideal field " + fname + " does not match " + K->name);
    return ideal_from_rows(K, parse_hnf(j.at("hnf")));
}

Json json_of(const FractionalIdeal &I) {
    Json j;
    j["field"] = I.numerator_lattice.field->name;
    j["hnf"] = hnf_json(I.numerator_lattice.hnf);
    j["denominator"] = json_of(I.denominator);
    return j;
}

Json json_of(const CurvePtr &E) {
    Json j;
    j["name"] = E->name;
    j["field"] = E->field->name;
    j["A"] = coords_json(E->A);
    j["B"] = coords_json(E->B);
    Json g;
    g["x"] = coords_json(E->generator.x);
    g["y"] = coords_json(E->generator.y);
    j["generator"] = g;
    if (E->rank_note) {
        Json n;
        n["top_field"] = E->rank_note->top_field;
        n["index"] = E->rank_note->index;
        j["rank_note"] = n;
    }
    return j;
}

CurvePtr parse_curve(const Json &j, const FieldResolver &resolve) {
    if (!j.is_object() || !j.contains("field")) throw usage_error("curve entries need a field name");
    FieldPtr K = resolve(j.at("field").get<std::string>());
    if (!K) throw usage_error("unknown curve field " + j.at("field").get<std::string>());
    Element A = element_from_coords(K, j.at("A"));
    Element B = element_from_coords(K, j.at("B"));
    const Json &g = j.at("generator");
    Element gx = element_from_coords(K, g.at("x"));
    Element gy = element_from_coords(K, g.at("y"));
    std::optional<RankNote> note;
    if (j.contains("rank_note")) {
        RankNote n;
        n.top_field = j.at("rank_note").value("top_field", std::string());
        n.index = j.at("rank_note").value("index", 1);
        note = n;
    }
    return make_curve(K, A, B, gx, gy, note, j.value("name", std::string()));
}

Json json_of(const FieldExtension &ext) {
    Json j;
    j["base"] = json_of(ext.base);
    j["top"] = json_of(ext.top);
    j["embedding"] = coords_json(ext.emb.image);
    return j;
}

FieldExtension parse_extension(const Json &j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("top"))
        throw usage_error("extension needs base, top, embedding");
    FieldPtr base = parse_field(j.at("base"));
    FieldPtr top = parse_field(j.at("top"));
    Element image = element_from_coords(top, j.at("embedding"));
    return make_extension(make_field_embedding(base, image));
}

static std::string monomial_key(const std::vector<int> &expo,
                                const std::vector<std::string> &vars) {
    std::string key;
    for (size_t i = 0; i < expo.size(); i++) {
        if (expo[i] == 0) continue;
        if (!key.empty()) key += "*";
        key += vars[i];
        if (expo[i] > 1) key += "^" + std::to_string(expo[i]);
    }
    return key.empty() ? "1" : key;
}

static std::vector<int> parse_monomial_key(const std::string &key,
                                           const std::vector<std::string> &vars) {
    std::vector<int> expo(vars.size(), 0);
    if (key == "1") return expo;
    size_t pos = 0;
    while (pos < key.size()) {
        size_t star = key.find('*', pos);
        std::string part = key.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? key.size() : star + 1;
        size_t caret = part.find('^');
        std::string name = part.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(part.substr(caret + 1));
            } catch (const std::exception &) {
                throw usage_error("bad exponent in monomial " + key);
            }
        }
        if (e < 1) throw usage_error("bad exponent in monomial " + key);
        size_t idx = vars.size();
        for (size_t i = 0; i < vars.size(); i++)
            if (vars[i] == name) idx = i;
        if (idx == vars.size()) throw usage_error("unknown variable " + name + " in monomial");
        expo[idx] += e;
    }
    return expo;
}

Json json_of(const PolySystem &sys) {
    Json j;
    j["label"] = sys.label;
    j["ring"] = json_of(sys.ring);
    j["parameters"] = sys.parameters;
    j["existentials"] = sys.existentials;
    std::vector<std::string> vars = sys.variables();
    Json eqs = Json::array();
    for (const MultiPoly &eq : sys.equations) {
        Json e = Json::object();
        for (const auto &[expo, coeff] : eq.terms) e[monomial_key(expo, vars)] = coords_json(coeff);
        eqs.push_back(e);
    }
    j["equations"] = eqs;
    return j;
}

PolySystem parse_polysystem(const Json &j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("equations"))
        throw usage_error("system needs ring, parameters, existentials, equations");
    PolySystem sys;
    sys.label = j.value("label", std::string());
    sys.ring = parse_extension(j.at("ring"));
    for (const Json &p : j.value("parameters", Json::array()))
        sys.parameters.push_back(p.get<std::string>());
    for (const Json &x : j.value("existentials", Json::array()))
        sys.existentials.push_back(x.get<std::string>());
    std::vector<std::string> vars = sys.variables();
    for (const Json &e : j.at("equations")) {
        MultiPoly mp;
        for (const auto &[key, coords] : e.items()) {
            Element c = element_from_coords(sys.ring.top, coords);
            if (c.is_zero()) continue;
            mp.terms[parse_monomial_key(key, vars)] = c;
        }
        sys.equations.push_back(mp);
    }
    return sys;
}

Json json_of_witness(const Witness &w) {
    Json j;
    j["field"] = w.empty() ? std::string() : w.begin()->second.field->name;
    Json vals = Json::object();
    for (const auto &[name, val] : w) vals[name] = coords_json(val);
    j["values"] = vals;
    return j;
}

Witness parse_witness(const Json &j, const FieldPtr &K) {
    if (!j.is_object() || !j.contains("values")) throw usage_error("witness needs values");
    Witness w;
    for (const auto &[name, coords] : j.at("values").items())
        w[name] = element_from_coords(K, coords);
    return w;
}

Json json_of(const ForcingParams &p) {
    Json j;
    j["ell"] = p.ell;
    j["n"] = p.n;
    return j;
}

Json json_of(const ForcingInstance &inst) {
    Json j;
    j["ext"] = json_of(inst.ext);
    j["alpha"] = coords_json(inst.alpha);
    j["modulus"] = json_of(inst.modulus);
    j["k"] = coords_json(inst.k);
    j["params"] = json_of(inst.params);
    return j;
}

Json json_of(const FuzzReport &r) {
    Json j;
    j["trials"] = r.trials;
    j["alphas"] = r.alphas;
    j["hypotheses_fail"] = r.hypotheses_fail;
    j["alpha_in_base"] = r.alpha_in_base;
    j["counterexample"] = r.counterexample;
    j["full_path_checks"] = r.full_path_checks;
    return j;
}

Json json_of(const ApproxResult &r) {
    Json j;
    j["k"] = json_of(r.k);
    j["modulus"] = json_of(r.modulus);
    j["s"] = coords_json(r.s);
    Json cert;
    cert["multiplier"] = json_of(r.multiplier);
    cert["deepenings"] = r.deepenings;
    j["certificate"] = cert;
    return j;
}

Json json_of(const NumeratorResult &r) {
    Json j;
    j["beta"] = coords_json(r.beta);
    j["s"] = coords_json(r.s);
    Json cert;
    cert["r_mult"] = json_of(r.r_mult);
    cert["q_mult"] = json_of(r.q_mult);
    j["certificate"] = cert;
    return j;
}

Json json_of(const SubfieldPresentation &s) {
    Json j;
    j["field"] = json_of(s.field);
    j["minpoly"] = json_of(s.minpoly);
    j["primitive"] = coords_json(s.primitive_in_F);
    return j;
}

Json json_of(const ReductionPlan &p) {
    Json j;
    j["field"] = json_of(p.field);
    j["l0_variant"] = p.l0_variant;
    Json conj = Json::array();
    for (const Automorphism &s : p.conjugations) conj.push_back(coords_json(s.image));
    j["conjugations"] = conj;
    Json ff = Json::array();
    for (const SubfieldPresentation &s : p.fixed_fields) ff.push_back(json_of(s));
    j["fixed_fields"] = ff;
    j["intersection"] = json_of(p.intersection);
    Json steps = Json::array();
    for (const ReductionStep &s : p.steps) {
        Json st;
        st["kind"] = s.kind;
        st["statement"] = s.statement;
        st["assumed"] = s.assumed;
        st["sigma_index"] = s.sigma_index;
        st["conditions"] = s.conditions;
        st["violations"] = s.violations;
        steps.push_back(st);
    }
    j["steps"] = steps;
    return j;
}

static Json system_with_witness(const PolySystem &sys, const Witness &w) {
    Json j;
    j["system"] = json_of(sys);
    j["witness"] = json_of_witness(w);
    return j;
}

Json json_of(const USeams &s) {
    Json j;
    j["s"] = coords_json(s.s);
    j["k"] = coords_json(s.k);
    j["beta"] = coords_json(s.beta);
    j["num_s"] = json_of(s.num_s);
    j["den_s"] = json_of(s.den_s);
    if (s.cong_num) j["cong_num"] = json_of(*s.cong_num);
    if (s.cong_den) j["cong_den"] = json_of(*s.cong_den);
    j["divides"] = system_with_witness(s.divides_sys, s.divides_w);
    j["numext"] = system_with_witness(s.numext_sys, s.numext_w);
    Json cong = Json::array();
    for (size_t i = 0; i < s.cong_sys.size(); i++)
        cong.push_back(system_with_witness(s.cong_sys[i], s.cong_w[i]));
    j["congruence"] = cong;
    return j;
}

Json json_of(const UCheck &c) {
    Json j;
    j["status"] = hybrid_status_name(c.status);
    j["reason"] = c.reason;
    j["trivial_branch"] = c.trivial_branch;
    j["branch_j"] = c.branch_j;
    j["refutation_candidates"] = c.refutation_candidates;
    if (c.seams) j["seams"] = json_of(*c.seams);
    if (c.instance) j["instance"] = json_of(*c.instance);
    return j;
}

Json json_of(const OKCheck &c) {
    Json j;
    j["status"] = hybrid_status_name(c.status);
    j["reason"] = c.reason;
    Json coords = Json::array();
    for (const Int &x : c.coords) coords.push_back(json_of(x));
    j["coords"] = coords;
    Json comps = Json::array();
    for (const UCheck &u : c.components) comps.push_back(json_of(u));
    j["components"] = comps;
    return j;
}

std::vector<FieldPtr> load_field_catalogue(const std::string &path) {
    Json j = load_json_file(path);
    if (!j.is_object() || !j.contains("fields"))
        throw usage_error("field catalogue needs a top-level fields array");
    std::vector<FieldPtr> out;
    for (const Json &f : j.at("fields")) out.push_back(parse_field(f));
    return out;
}

std::vector<CurvePtr> load_curve_catalogue(const std::string &path,
                                           const FieldResolver &resolve) {
    Json j = load_json_file(path);
    if (!j.is_object() || !j.contains("curves"))
        throw usage_error("curve catalogue needs a top-level curves array");
    std::vector<CurvePtr> out;
    for (const Json &c : j.at("curves")) out.push_back(parse_curve(c, resolve));
    return out;
}

}  // namespace diodef
