/* diodef: command-line front end.
 *
 * JSON goes to standard output (canonical key order, so identical inputs and
 * seeds give byte-identical bytes); diagnostics go to standard error.  Exit
 * codes: 0 success, 1 domain error, 2 usage error, 3 resource budget
 * exceeded.
 *
 * Encodings, used by every subcommand:
 *   element   comma-separated exact rationals, integral-basis coordinates,
 *             e.g. "0,5" for 5i in Q(i), "1/2,3" for 1/2 + 3*sqrt(2)
 *   ideal     HNF rows separated by ';', integer entries, e.g. "2,1;0,1";
 *             a single row of element coordinates names a principal ideal
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "diodef/errors.hpp"
#include "diodef/numeric.hpp"
#include "diodef/roots.hpp"
#include "diodef/serialize.hpp"

using namespace diodef;

namespace {

std::string g_output = "json";
int g_jobs = 1;
int g_exit = 0;

void print_out(const Json &j, const std::string &text) {
    if (g_output == "text")
        std::cout << text;
    else
        std::cout << json_text(j);
}

/* ---- argument encodings ---- */

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Element element_arg(const FieldPtr &K, const std::string &s) {
    QVec coords;
    for (const std::string &p : split(s, ',')) {
        if (p.empty()) throw usage_error("empty coordinate in \"" + s + "\"");
        coords.push_back(parse_rat(p));
    }
    if (coords.size() != K->degree)
        throw usage_error("expected " + std::to_string(K->degree) + " coordinates for " +
                          K->name + ", got " + std::to_string(coords.size()));
    return K->from_integral(coords);
}

Ideal ideal_arg(const FieldPtr &K, const std::string &s) {
    std::vector<std::string> rows = split(s, ';');
    if (rows.size() == 1 && K->degree > 1) {
        /* single row: principal ideal by generator coordinates */
        Element g = element_arg(K, rows[0]);
        if (!is_integral(g)) throw usage_error("principal generator must be integral: " + s);
        return principal_ideal(g);
    }
    ZMat m;
    for (const std::string &r : rows) {
        IVec row;
        for (const std::string &p : split(r, ',')) {
            if (p.empty()) throw usage_error("empty entry in ideal \"" + s + "\"");
            Rat q = parse_rat(p);
            if (q.get_den() != 1) throw usage_error("ideal rows take integer entries: " + s);
            row.push_back(q.get_num());
        }
        if (row.size() != K->degree)
            throw usage_error("ideal rows need " + std::to_string(K->degree) + " entries");
        m.push_back(row);
    }
    return ideal_from_rows(K, m);
}

std::string coords_text(const Element &a) {
    std::string s;
    for (const Rat &q : integral_coords(a)) {
        if (!s.empty()) s += ",";
        s += q.get_str();
    }
    return s;
}

std::string hnf_text(const Ideal &I) {
    std::string s;
    for (const IVec &row : I.hnf) {
        if (!s.empty()) s += ";";
        std::string r;
        for (const Int &x : row) {
            if (!r.empty()) r += ",";
            r += x.get_str();
        }
        s += r;
    }
    return s;
}

/* ---- catalogue resolution: builtins first, then the configured files ---- */

struct Catalogues {
    std::string fields_path, curves_path;
    mutable std::optional<std::vector<FieldPtr>> fields;
    mutable std::optional<std::vector<CurvePtr>> curves;

    void resolve_defaults() {
        const char *dir = std::getenv("DIODEF_CATALOGUE_DIR");
        if (dir && *dir) {
            namespace fs = std::filesystem;
            if (fields_path.empty() && fs::exists(fs::path(dir) / "fields.json"))
                fields_path = (fs::path(dir) / "fields.json").string();
            if (curves_path.empty() && fs::exists(fs::path(dir) / "curves.json"))
                curves_path = (fs::path(dir) / "curves.json").string();
        }
    }

    const std::vector<FieldPtr> &field_entries() const {
        if (!fields) {
            fields.emplace();
            if (!fields_path.empty()) *fields = load_field_catalogue(fields_path);
        }
        return *fields;
    }

    const std::vector<CurvePtr> &curve_entries() const {
        if (!curves) {
            curves.emplace();
            if (!curves_path.empty())
                *curves = load_curve_catalogue(curves_path,
                                               [this](const std::string &n) { return field(n); });
        }
        return *curves;
    }

    FieldPtr field(const std::string &name) const {
        try {
            return field_by_name(name);
        } catch (const domain_error &) {
        }
        for (const FieldPtr &K : field_entries())
            if (K->name == name) return K;
        throw usage_error("unknown field: " + name);
    }

    CurvePtr curve(const std::string &name) const {
        try {
            return curve_by_name(name);
        } catch (const domain_error &) {
        }
        for (const CurvePtr &E : curve_entries())
            if (E->name == name) return E;
        throw usage_error("unknown curve: " + name);
    }

    std::vector<std::string> field_names() const {
        std::vector<std::string> out = catalogue_field_names();
        for (const FieldPtr &K : field_entries()) out.push_back(K->name);
        return out;
    }

    std::vector<std::string> curve_names() const {
        std::vector<std::string> out = catalogue_curve_names();
        for (const CurvePtr &E : curve_entries()) out.push_back(E->name);
        return out;
    }
};

std::vector<int> parse_only(const std::string &s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const std::string &p : split(s, ',')) {
        try {
            out.push_back(std::stoi(p));
        } catch (const std::exception &) {
            throw usage_error("--only takes comma-separated criterion numbers");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{
        "diodef: number-field and elliptic-curve machinery for diophantine "
        "definitions of rings of integers.\n"
        "Elements are comma-separated exact rationals in integral-basis "
        "coordinates; ideals are HNF rows separated by ';' (a single row is "
        "read as a principal generator).  JSON on stdout, diagnostics on "
        "stderr; exit 0 ok, 1 domain error, 2 usage, 3 budget."};
    app.require_subcommand(1);

    Catalogues cat;
    app.add_option("--fields", cat.fields_path,
                   "field catalogue JSON (default: $DIODEF_CATALOGUE_DIR/fields.json)");
    app.add_option("--curves", cat.curves_path,
                   "curve catalogue JSON (default: $DIODEF_CATALOGUE_DIR/curves.json)");
    app.add_option("--jobs", g_jobs, "worker cap for parallel stages")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", g_output, "output mode")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    /* ---- field ---- */
    auto *sc_field = app.add_subcommand("field", "inspect the field catalogue");
    std::string field_name;
    bool field_list = false;
    sc_field->add_option("--name", field_name, "field to describe");
    sc_field->add_flag("--list", field_list, "list the available names (default)");
    sc_field->callback([&] {
        if (field_name.empty()) {
            Json j;
            Json names = Json::array();
            std::string text;
            for (const std::string &n : cat.field_names()) {
                names.push_back(n);
                text += n + "\n";
            }
            j["fields"] = names;
            print_out(j, text);
            return;
        }
        FieldPtr K = cat.field(field_name);
        RootSet rs = isolate_roots(K->poly);
        Json j;
        j["field"] = json_of(K);
        j["degree"] = K->degree;
        j["discriminant"] = json_of(K->disc);
        Json sig;
        sig["r1"] = rs.r1;
        sig["r2"] = rs.r2;
        j["signature"] = sig;
        j["galois"] = is_galois(K);
        std::string text = K->name + ": degree " + std::to_string(K->degree) +
                           ", discriminant " + K->disc.get_str() + ", signature (" +
                           std::to_string(rs.r1) + "," + std::to_string(rs.r2) + ")" +
                           (is_galois(K) ? ", Galois" : ", not Galois") + "\n";
        print_out(j, text);
    });

    /* ---- ideal ---- */
    auto *sc_ideal = app.add_subcommand("ideal", "ideal arithmetic over a catalogue ring");
    std::string id_field, id_gens, id_rows, id_gens2, id_rows2, id_elem;
    std::string id_op = "info";
    sc_ideal->add_option("--field", id_field, "coefficient field")->required();
    sc_ideal->add_option("--gens", id_gens, "';'-separated generator coordinate lists");
    sc_ideal->add_option("--rows", id_rows, "HNF rows of the first ideal");
    sc_ideal->add_option("--gens2", id_gens2, "generators of the second ideal");
    sc_ideal->add_option("--rows2", id_rows2, "HNF rows of the second ideal");
    sc_ideal->add_option("--element", id_elem, "element coordinates: print num/den ideals");
    sc_ideal->add_option("--op", id_op, "info|sum|mul|intersect|colon|divides|coprime|factor")
        ->check(CLI::IsMember(
            {"info", "sum", "mul", "intersect", "colon", "divides", "coprime", "factor"}))
        ->capture_default_str();
    sc_ideal->callback([&] {
        FieldPtr K = cat.field(id_field);
        if (!id_elem.empty()) {
            Element a = element_arg(K, id_elem);
            auto [num, den] = num_den(a);
            Json j;
            j["num"] = json_of(num);
            j["den"] = json_of(den);
            print_out(j, "num " + hnf_text(num) + " (norm " + num.norm().get_str() + "), den " +
                             hnf_text(den) + " (norm " + den.norm().get_str() + ")\n");
            return;
        }
        auto build = [&](const std::string &gens, const std::string &rows,
                         const char *which) -> Ideal {
            if (!gens.empty() && !rows.empty())
                throw usage_error(std::string("give either generators or rows for the ") + which +
                                  " ideal, not both");
            if (!gens.empty()) {
                std::vector<Element> gs;
                for (const std::string &g : split(gens, ';')) gs.push_back(element_arg(K, g));
                return ideal_from_gens(K, gs);
            }
            if (!rows.empty()) return ideal_arg(K, rows);
            throw usage_error(std::string("missing the ") + which + " ideal (--gens/--rows)");
        };
        Ideal I = build(id_gens, id_rows, "first");
        if (id_op == "info") {
            auto [i1, i2] = two_element_rep(I);
            Json j;
            j["ideal"] = json_of(I);
            j["norm"] = json_of(I.norm());
            Json two = Json::array();
            two.push_back(coords_json(i1));
            two.push_back(coords_json(i2));
            j["two_elements"] = two;
            print_out(j, "hnf " + hnf_text(I) + ", norm " + I.norm().get_str() + ", generators (" +
                             coords_text(i1) + ") and (" + coords_text(i2) + ")\n");
            return;
        }
        if (id_op == "factor") {
            PrimeFactorization pf = factor(I);
            Json j;
            Json fs = Json::array();
            std::string text;
            for (const auto &[P, e] : pf.factors) {
                Json f;
                f["p"] = json_of(P.p);
                f["f"] = P.f;
                f["exponent"] = e;
                f["ideal"] = json_of(P.ideal);
                fs.push_back(f);
                text += "(" + hnf_text(P.ideal) + ") over " + P.p.get_str() + ", f=" +
                        std::to_string(P.f) + ", exponent " + std::to_string(e) + "\n";
            }
            j["factors"] = fs;
            print_out(j, text);
            return;
        }
        Ideal J = build(id_gens2, id_rows2, "second");
        if (id_op == "divides") {
            bool d = ideal_divides(I, J);
            Json j;
            j["divides"] = d;
            print_out(j, std::string(d ? "divides" : "does not divide") + "\n");
            return;
        }
        if (id_op == "coprime") {
            bool c = ideals_coprime(I, J);
            Json j;
            j["coprime"] = c;
            print_out(j, std::string(c ? "coprime" : "not coprime") + "\n");
            return;
        }
        Ideal R = id_op == "sum"         ? ideal_sum(I, J)
                  : id_op == "mul"       ? ideal_mul(I, J)
                  : id_op == "intersect" ? ideal_intersect(I, J)
                                         : ideal_colon(I, J);
        Json j;
        j["ideal"] = json_of(R);
        j["norm"] = json_of(R.norm());
        print_out(j, "hnf " + hnf_text(R) + ", norm " + R.norm().get_str() + "\n");
    });

    /* ---- nonzero ---- */
    auto *sc_nonzero = app.add_subcommand("nonzero", "witness (2x-1)(3x-1) = y a for a != 0");
    std::string nz_field, nz_a;
    sc_nonzero->add_option("--field", nz_field, "coefficient field")->required();
    sc_nonzero->add_option("--a", nz_a, "element coordinates")->required();
    sc_nonzero->callback([&] {
        FieldPtr K = cat.field(nz_field);
        Element a = element_arg(K, nz_a);
        auto [x, y] = nonzero_witness(a);
        PolySystem sys = emit_nonzero(identity_extension(K));
        Witness w{{"a", a}, {"x", x}, {"y", y}};
        if (!verify_witness(sys, w))
            throw std::logic_error("constructed nonzero witness fails verification");
        print_out(json_of_witness(w),
                  "x = " + coords_text(x) + ", y = " + coords_text(y) + "\n");
    });

    /* ---- forcing ---- */
    auto *sc_forcing = app.add_subcommand("forcing", "the congruence-forcing lemma");
    sc_forcing->require_subcommand(1);

    auto *fo_check = sc_forcing->add_subcommand("check", "evaluate one instance");
    std::string fc_field, fc_base = "rat", fc_alpha, fc_ideal, fc_k;
    fo_check->add_option("--field", fc_field, "top field L (Galois)")->required();
    fo_check->add_option("--base", fc_base, "base field K")->capture_default_str();
    fo_check->add_option("--alpha", fc_alpha, "alpha in O_L (coordinates)")->required();
    fo_check->add_option("--ideal", fc_ideal, "modulus over K (HNF rows)")->required();
    fo_check->add_option("--k", fc_k, "k in K (coordinates)")->required();
    fo_check->callback([&] {
        FieldPtr L = cat.field(fc_field), K = cat.field(fc_base);
        ForcingInstance inst;
        inst.ext = make_extension(K, L);
        inst.alpha = element_arg(L, fc_alpha);
        inst.modulus = ideal_arg(K, fc_ideal);
        inst.k = element_arg(K, fc_k);
        inst.params = compute_n((long)L->degree);
        validate_instance(inst);
        bool hyp = check_hypotheses(inst);
        ForcingVerdict v = forcing_conclusion(inst);
        Json j;
        j["instance"] = json_of(inst);
        j["hypotheses_hold"] = hyp;
        j["verdict"] = verdict_name(v);
        print_out(j, std::string("hypotheses ") + (hyp ? "hold" : "fail") + "; verdict " +
                         verdict_name(v) + "\n");
    });

    auto *fo_n = sc_forcing->add_subcommand("n", "the parameter n for a given degree");
    long fn_ell = 0;
    fo_n->add_option("--ell", fn_ell, "field degree over Q")->required();
    fo_n->callback([&] {
        ForcingParams p = compute_n(fn_ell);
        print_out(json_of(p), "ell " + std::to_string(p.ell) + " -> n " + std::to_string(p.n) +
                                  "\n");
    });

    auto *fo_fuzz = sc_forcing->add_subcommand("fuzz", "randomized counterexample search");
    std::string fz_field;
    long fz_trials = 100, fz_height = 10, fz_norm = 1000000;
    uint64_t fz_seed = 42;
    fo_fuzz->add_option("--field", fz_field, "top field L (Galois)")->required();
    fo_fuzz->add_option("--trials", fz_trials, "instances to draw")->capture_default_str();
    fo_fuzz->add_option("--height-bound", fz_height, "coordinate bound for alpha")
        ->capture_default_str();
    fo_fuzz->add_option("--norm-bound", fz_norm, "norm cap for the modulus")
        ->capture_default_str();
    fo_fuzz->add_option("--seed", fz_seed, "RNG seed")->capture_default_str();
    fo_fuzz->callback([&] {
        FieldPtr L = cat.field(fz_field);
        FuzzReport rep = forcing_fuzz(L, fz_trials, fz_height, Int(fz_norm), fz_seed, g_jobs);
        print_out(json_of(rep),
                  "trials " + std::to_string(rep.trials) + ": hypotheses_fail " +
                      std::to_string(rep.hypotheses_fail) + ", alpha_in_base " +
                      std::to_string(rep.alpha_in_base) + ", counterexample " +
                      std::to_string(rep.counterexample) + "\n");
    });

    /* ---- approx ---- */
    auto *sc_approx = app.add_subcommand(
        "approx", "t-ratio approximations s = t(kR)/t(R) on a catalogue curve");
    std::string ap_curve, ap_k, ap_modulus, ap_beta;
    long ap_budget = 100000;
    sc_approx->add_option("--curve", ap_curve, "curve name")->required();
    sc_approx->add_option("--k", ap_k, "target integer k (with --modulus)");
    sc_approx->add_option("--modulus", ap_modulus, "good-reduction modulus (HNF rows)");
    sc_approx->add_option("--beta", ap_beta,
                          "element coordinates: witness (beta) | num(s) instead");
    sc_approx->add_option("--budget", ap_budget, "decimal-digit cap on intermediates")
        ->capture_default_str();
    sc_approx->callback([&] {
        CurvePtr E = cat.curve(ap_curve);
        if (!ap_beta.empty()) {
            if (!ap_k.empty() || !ap_modulus.empty())
                throw usage_error("--beta excludes --k/--modulus");
            NumeratorResult r = numerator_witness(E, element_arg(E->field, ap_beta), ap_budget);
            print_out(json_of(r), "s has " + std::to_string(element_digits(r.s)) +
                                      " digits; R = " + r.r_mult.get_str() +
                                      "*P, Q = " + r.q_mult.get_str() + "*R\n");
            return;
        }
        if (ap_k.empty() || ap_modulus.empty())
            throw usage_error("approx needs --k and --modulus (or --beta)");
        ApproxResult r = approximate(E, parse_int(ap_k), ideal_arg(E->field, ap_modulus),
                                     ap_budget);
        print_out(json_of(r), "s has " + std::to_string(element_digits(r.s)) +
                                  " digits; k = " + r.k.get_str() + ", R = " +
                                  r.multiplier.get_str() + "*P, deepenings " +
                                  std::to_string(r.deepenings) + "\n");
    });

    /* ---- emit ---- */
    auto *sc_emit = app.add_subcommand("emit", "emit a predicate as a polynomial system");
    std::string em_pred, em_field, em_ideal, em_ideal2, em_curve;
    int em_r = 2;
    sc_emit
        ->add_option("--predicate", em_pred,
                     "nonzero|ideal_membership|ideal_divides|ideal_equal|coprime|"
                     "principal_ratio|is_num|congruence|coset_membership")
        ->required();
    sc_emit->add_option("--field", em_field, "coefficient field (all but coset_membership)");
    sc_emit->add_option("--ideal", em_ideal, "first ideal argument (HNF rows)");
    sc_emit->add_option("--ideal2", em_ideal2, "second ideal argument (HNF rows)");
    sc_emit->add_option("--curve", em_curve, "curve for coset_membership");
    sc_emit->add_option("--r", em_r, "coset index r (coset_membership)")->capture_default_str();
    sc_emit->callback([&] {
        PolySystem sys;
        if (em_pred == "nonzero") {
            if (em_field.empty()) throw usage_error("emit nonzero needs --field");
            sys = emit_nonzero(identity_extension(cat.field(em_field)));
        } else if (em_pred == "coset_membership") {
            if (em_curve.empty()) throw usage_error("emit coset_membership needs --curve");
            CosetData data;
            data.curve = cat.curve(em_curve);
            data.reps = {data.curve->generator};
            data.r = em_r;
            sys = emit_coset_membership(data).sys;
        } else {
            PredicateKind kind = predicate_kind_of(em_pred);
            if (em_field.empty()) throw usage_error("emit " + em_pred + " needs --field");
            FieldPtr K = cat.field(em_field);
            if (em_ideal.empty()) throw usage_error("emit " + em_pred + " needs --ideal");
            std::vector<Ideal> ideals = {ideal_arg(K, em_ideal)};
            bool unary = kind == PredicateKind::ideal_membership ||
                         kind == PredicateKind::congruence;
            if (!unary) {
                if (em_ideal2.empty()) throw usage_error("emit " + em_pred + " needs --ideal2");
                ideals.push_back(ideal_arg(K, em_ideal2));
            } else if (!em_ideal2.empty()) {
                throw usage_error("emit " + em_pred + " takes a single ideal");
            }
            sys = emit_predicate(kind, identity_extension(K), ideals);
        }
        print_out(json_of(sys),
                  "system " + sys.label + ": " + std::to_string(sys.parameters.size()) +
                      " parameters, " + std::to_string(sys.existentials.size()) +
                      " existentials, " + std::to_string(sys.equations.size()) + " equations\n");
    });

    /* ---- verify ---- */
    auto *sc_verify = app.add_subcommand("verify", "verify a witness against a system");
    std::string vf_system, vf_witness;
    sc_verify->add_option("--system", vf_system, "system JSON file")->required();
    sc_verify->add_option("--witness", vf_witness, "witness JSON file")->required();
    sc_verify->callback([&] {
        PolySystem sys = parse_polysystem(load_json_file(vf_system));
        Witness w = parse_witness(load_json_file(vf_witness), sys.ring.top);
        bool ok = verify_witness(sys, w);
        Json j;
        j["system"] = sys.label;
        j["verified"] = ok;
        print_out(j, std::string(ok ? "verified" : "not verified") + "\n");
    });

    /* ---- scalarize ---- */
    auto *sc_scal = app.add_subcommand(
        "scalarize", "re-express a system with integer-coordinate variables");
    std::string sl_system, sl_witness, sl_unscal;
    sc_scal->add_option("--system", sl_system, "system JSON file")->required();
    sc_scal->add_option("--witness", sl_witness, "witness to map down alongside");
    sc_scal->add_option("--unscalarize", sl_unscal, "scalar witness to map back up");
    sc_scal->callback([&] {
        PolySystem sys = parse_polysystem(load_json_file(sl_system));
        ScalarizedSystem sc = scalarize(sys);
        Json j;
        j["system"] = json_of(sc.scalar);
        std::string text = "system " + sc.scalar.label + ": " +
                           std::to_string(sc.scalar.equations.size()) + " equations over " +
                           std::to_string(sc.kappa) + " coordinates per source variable\n";
        if (!sl_witness.empty() && !sl_unscal.empty())
            throw usage_error("--witness and --unscalarize are mutually exclusive");
        if (!sl_witness.empty()) {
            Witness w = parse_witness(load_json_file(sl_witness), sys.ring.top);
            j["witness"] = json_of_witness(scalarize_witness(sc, w));
        }
        if (!sl_unscal.empty()) {
            Witness sw = parse_witness(load_json_file(sl_unscal), sc.scalar.ring.top);
            j["witness"] = json_of_witness(unscalarize_witness(sc, sw));
        }
        print_out(j, text);
    });

    /* ---- plan ---- */
    auto *sc_plan = app.add_subcommand("plan", "reduction plan for a Galois field");
    std::string pl_field;
    bool pl_l0 = false;
    sc_plan->add_option("--field", pl_field, "Galois field over Q")->required();
    sc_plan->add_flag("--l0-variant", pl_l0, "check the restricted-surd side conditions");
    sc_plan->callback([&] {
        FieldPtr F = cat.field(pl_field);
        ReductionPlan P = pl_l0 ? plan_L0_variant(F) : plan(F);
        std::string text;
        for (const ReductionStep &st : P.steps) {
            text += st.kind + ": " + st.statement;
            if (!st.assumed.empty()) text += " [assumed: " + st.assumed + "]";
            text += "\n";
            for (const std::string &v : st.violations) text += "  violated: " + v + "\n";
        }
        print_out(json_of(P), text);
    });

    /* ---- selftest ---- */
    auto *sc_self = app.add_subcommand("selftest", "run the acceptance criteria");
    uint64_t st_seed = 42;
    std::string st_only, st_golden;
    sc_self->add_option("--seed", st_seed, "RNG seed")->capture_default_str();
    sc_self->add_option("--only", st_only, "comma-separated criterion numbers");
    sc_self->add_option("--golden-dir", st_golden,
                        "golden emission directory (default: $DIODEF_GOLDEN_DIR, else "
                        "tests/golden)");
    sc_self->callback([&] {
        AcceptanceOptions opt;
        opt.seed = st_seed;
        opt.jobs = g_jobs;
        opt.only = parse_only(st_only);
        opt.golden_dir = st_golden;
        if (opt.golden_dir.empty() && !std::getenv("DIODEF_GOLDEN_DIR") &&
            std::filesystem::exists("tests/golden"))
            opt.golden_dir = "tests/golden";
        opt.progress = [](const std::string &m) { std::cerr << m << "\n"; };
        std::vector<CriterionResult> results = run_acceptance(opt);
        bool all = true;
        Json j;
        j["seed"] = std::to_string(st_seed);
        Json arr = Json::array();
        std::string text;
        for (const CriterionResult &r : results) {
            std::cerr << acceptance_line(r) << "\n";
            Json c;
            c["id"] = r.id;
            c["name"] = r.name;
            c["passed"] = r.passed;
            c["detail"] = r.detail;
            arr.push_back(c);
            all = all && r.passed;
            text += std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + ": " +
                    r.name + "\n";
        }
        j["criteria"] = arr;
        j["all_passed"] = all;
        print_out(j, text);
        if (!all) g_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e); /* --help and friends */
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error &e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
