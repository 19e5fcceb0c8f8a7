#include "cohiggs/json_io.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cohiggs {

namespace {

const Json& require_field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw SchemaError("expected an object with field '" + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + key + "'");
    return *it;
}

long long int_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw SchemaError("field '" + what + "' must be an integer");
    return j.get<long long>();
}

long long int_field(const Json& j, const std::string& key) {
    return int_from_json(require_field(j, key), key);
}

long long int_field_or(const Json& j, const std::string& key, long long dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return int_from_json(j.at(key), key);
}

bool bool_field(const Json& j, const std::string& key) {
    const Json& v = require_field(j, key);
    if (!v.is_boolean()) throw SchemaError("field '" + key + "' must be a boolean");
    return v.get<bool>();
}

bool bool_field_or(const Json& j, const std::string& key, bool dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    if (!j.at(key).is_boolean()) throw SchemaError("field '" + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

std::string string_field(const Json& j, const std::string& key) {
    const Json& v = require_field(j, key);
    if (!v.is_string()) throw SchemaError("field '" + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw SchemaError("rationals are integers or \"p/q\" strings");
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Json h0_to_json(const H0Value& v) {
    Json j;
    switch (v.kind) {
        case H0Value::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = v.value;
            break;
        case H0Value::Kind::Interval:
            j["kind"] = "interval";
            j["lo"] = v.lo;
            j["hi"] = v.hi;
            break;
        case H0Value::Kind::Undecidable:
            j["kind"] = "undecidable";
            j["note"] = v.note;
            break;
    }
    return j;
}

GaussQ gauss_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("Q(i) values are [re, im] pairs of rationals");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json gauss_to_json(const GaussQ& g) {
    return Json::array({rational_to_json(g.re), rational_to_json(g.im)});
}

Mat2 mat2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw SchemaError("matrices are 2x2 arrays of [re, im] entries");
    return Mat2::from_gauss(gauss_from_json(j[0][0]), gauss_from_json(j[0][1]),
                            gauss_from_json(j[1][0]), gauss_from_json(j[1][1]));
}

Json tower_to_json(const TowerElem& t) {
    Json j;
    j["base"] = gauss_to_json(t.base_part());
    if (!t.in_base()) {
        j["ext"] = gauss_to_json(t.ext_part());
        j["theta"] = gauss_to_json(t.theta());
    }
    return j;
}

static Json mat2_to_json(const Mat2& m) {
    Json j = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 2; ++k) row.push_back(tower_to_json(m.m[i][k]));
        j.push_back(row);
    }
    return j;
}

PointLabel point_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.size() == 2 && s[0] == 'W' && s[1] >= '1' && s[1] <= '6')
            return PointLabel::weierstrass(s[1] - '0');
        if (s.rfind("pt:", 0) == 0) return PointLabel::opaque(s.substr(3));
        throw SchemaError("point labels are \"W1\"..\"W6\", \"pt:<label>\" or generic objects");
    }
    if (j.is_object()) {
        std::string label = string_field(j, "generic");
        std::string sheet = string_field(j, "sheet");
        if (sheet != "+" && sheet != "-") throw SchemaError("sheet must be \"+\" or \"-\"");
        return PointLabel::generic(label, sheet == "+");
    }
    throw SchemaError("bad point label");
}

Json point_to_json(const PointLabel& p) {
    switch (p.kind) {
        case PointLabel::Kind::Weierstrass: return "W" + std::to_string(p.w);
        case PointLabel::Kind::Opaque: return "pt:" + p.label;
        case PointLabel::Kind::Generic: {
            Json j;
            j["generic"] = p.label;
            j["sheet"] = p.sheet_plus ? "+" : "-";
            return j;
        }
    }
    throw SchemaError("bad point label");
}

DivisorG2 divisor_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("divisors are arrays of {at, mult} terms");
    DivisorG2 d;
    for (const auto& term : j) {
        PointLabel p = point_from_json(require_field(term, "at"));
        d.add(p, int_field(term, "mult"));
    }
    return d;
}

Json divisor_to_json(const DivisorG2& d) {
    Json j = Json::array();
    for (const auto& [p, m] : d.coeff) {
        Json term;
        term["at"] = point_to_json(p);
        term["mult"] = m;
        j.push_back(term);
    }
    return j;
}

SurfaceSpec surface_from_json(const Json& j) {
    SurfaceSpec s;
    s.g = int_field(j, "g");
    s.d = int_field(j, "d");
    s.tau_log = rational_from_json(require_field(j, "tau_log"));
    return s;
}

static Json surface_to_json(const SurfaceSpec& s) {
    Json j;
    j["g"] = s.g;
    j["d"] = s.d;
    j["tau_log"] = rational_to_json(s.tau_log);
    return j;
}

LineBundleX line_bundle_from_json(const Json& j) {
    LineBundleX lb;
    lb.h_deg = int_field(j, "h_deg");
    lb.q = rational_from_json(require_field(j, "q"));
    lb.n_delta = int_field_or(j, "n_delta", 0);
    lb.e_inv = int_field_or(j, "e_inv", 0);
    if (j.contains("phase")) lb.phase = string_field(j, "phase");
    validate_line_bundle_basic(lb);
    return lb;
}

Json line_bundle_to_json(const LineBundleX& lb) {
    Json j;
    j["h_deg"] = lb.h_deg;
    j["q"] = rational_to_json(lb.q);
    j["n_delta"] = lb.n_delta;
    j["e_inv"] = lb.e_inv;
    if (!lb.phase.empty()) j["phase"] = lb.phase;
    return j;
}

static Jump jump_from_json(const Json& j) {
    Jump out;
    out.at = point_from_json(require_field(j, "at"));
    const Json& hs = require_field(j, "heights");
    if (!hs.is_array() || hs.empty()) throw SchemaError("heights must be a non-empty array");
    for (const auto& h : hs) out.heights.push_back(int_from_json(h, "heights"));
    return out;
}

static Json jump_to_json(const Jump& j) {
    Json out;
    out["at"] = point_to_json(j.at);
    out["heights"] = j.heights;
    return out;
}

BundleDescriptor descriptor_from_json(const Json& j) {
    BundleDescriptor d;
    d.delta = line_bundle_from_json(require_field(j, "delta"));
    d.c2 = int_field(j, "c2");
    if (j.contains("jumps")) {
        const Json& js = j.at("jumps");
        if (!js.is_array()) throw SchemaError("jumps must be an array");
        for (const auto& x : js) d.jumps.push_back(jump_from_json(x));
    }
    d.filtrable = bool_field_or(j, "filtrable", false);
    d.regular_generic_fibre = bool_field_or(j, "regular_generic_fibre", false);
    validate_descriptor(d);
    return d;
}

Json descriptor_to_json(const BundleDescriptor& d) {
    Json j;
    j["delta"] = line_bundle_to_json(d.delta);
    j["c2"] = d.c2;
    Json js = Json::array();
    for (const auto& x : d.jumps) js.push_back(jump_to_json(x));
    j["jumps"] = js;
    j["filtrable"] = d.filtrable;
    j["regular_generic_fibre"] = d.regular_generic_fibre;
    return j;
}

G2HiggsInput g2_input_from_json(const Json& j) {
    G2HiggsInput in;
    in.e_inv = int_field(j, "e_inv");
    in.k = int_field(j, "k");
    if (j.contains("jumps")) {
        const Json& js = j.at("jumps");
        if (!js.is_array()) throw SchemaError("jumps must be an array");
        for (const auto& x : js) in.jumps.push_back(jump_from_json(x));
    }
    in.R = divisor_from_json(require_field(j, "R"));
    if (j.contains("N") && !j.at("N").is_null()) in.n_clean = divisor_from_json(j.at("N"));
    return in;
}

namespace {

HomPoly poly_from_json(const Json& j, int degree, const std::string& what) {
    if (!j.is_array()) throw SchemaError(what + " must be a coefficient array");
    if (j.empty()) return HomPoly::zero(degree);
    if (static_cast<int>(j.size()) != degree + 1)
        throw SchemaError(what + " needs " + std::to_string(degree + 1) + " coefficients");
    std::vector<GaussQ> cs;
    for (const auto& c : j) cs.push_back(gauss_from_json(c));
    return HomPoly::of(degree, std::move(cs));
}

PolyMat2 polymat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw SchemaError("polynomial matrices are 2x2 arrays of coefficient arrays");
    int deg = 0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            if (j[i][k].is_array() && !j[i][k].empty())
                deg = std::max(deg, static_cast<int>(j[i][k].size()) - 1);
    PolyMat2 p = PolyMat2::zero(deg);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            p.e[i][k] = poly_from_json(j[i][k], deg, "matrix entry");
    return p;
}

H0Flags flags_from_json(const Json& j) {
    H0Flags f;
    if (!j.is_object()) throw SchemaError("flags must be an object");
    auto read = [&](const char* key) -> std::optional<bool> {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_boolean()) throw SchemaError("flags are booleans");
        return j.at(key).get<bool>();
    };
    f.is_canonical = read("is_canonical");
    f.is_trivial = read("is_trivial");
    f.is_effective = read("is_effective");
    f.generic = read("generic");
    return f;
}

Json range_verdict_to_json(const RangeVerdict& rv) {
    Json j;
    j["exists"] = rv.exists;
    j["filtrable_exists"] = rv.filtrable_exists;
    j["in_nonfiltrable_range"] = rv.in_nonfiltrable_range;
    j["delta"] = rational_to_json(rv.delta);
    j["m"] = rational_to_json(rv.m);
    j["floor"] = rational_to_json(rv.floor_);
    return j;
}

Json cmd_surface_validate(const Json& req) {
    SurfaceSpec s = validate_surface(surface_from_json(req));
    return surface_to_json(s);
}

Json cmd_surface_degree(const Json& req) {
    SurfaceSpec s = validate_surface(surface_from_json(require_field(req, "surface")));
    LineBundleX lb = line_bundle_from_json(require_field(req, "line_bundle"));
    Json j;
    j["degree"] = rational_to_json(degree(lb, s));
    return j;
}

Json cmd_surface_canon(const Json& req) {
    SurfaceSpec s = validate_surface(surface_from_json(require_field(req, "surface")));
    LineBundleX lb = line_bundle_from_json(require_field(req, "line_bundle"));
    return line_bundle_to_json(canonicalize(lb, s));
}

Json cmd_range_classify(const Json& req) {
    LineBundleX lb = line_bundle_from_json(require_field(req, "delta"));
    long long c2 = int_field(req, "c2");
    if (req.contains("g")) {
        SurfaceSpec s;
        s.g = int_field(req, "g");
        validate_line_bundle(lb, s);
    }
    return range_verdict_to_json(classify_range(c2, lb));
}

Json cmd_hopf_nf_even(const Json& req) {
    Mat2 a1 = mat2_from_json(require_field(req, "a1"));
    Mat2 a2 = mat2_from_json(require_field(req, "a2"));
    NormalFormEven nf = normal_form_even(a1, a2);
    Json j;
    if (!nf.stable) {
        j["status"] = "unstable";
        j["common_eigenvector"] =
            Json::array({tower_to_json(nf.common.x), tower_to_json(nf.common.y)});
        return j;
    }
    j["status"] = "stable";
    Json pt;
    pt["t_sq"] = gauss_to_json(nf.point.t_sq);
    pt["s"] = tower_to_json(nf.point.s_p);
    pt["v"] = tower_to_json(nf.point.v_p);
    j["point"] = pt;
    j["certificate"] = mat2_to_json(nf.certificate);
    Json forms;
    forms["a1"] = mat2_to_json(nf.nf1);
    forms["a2"] = mat2_to_json(nf.nf2);
    j["normal_form"] = forms;
    return j;
}

Json cmd_hopf_nf_odd(const Json& req) {
    HomPoly a = poly_from_json(require_field(req, "a"), 1, "a");
    HomPoly b = poly_from_json(require_field(req, "b"), 2, "b");
    GaussQ c = gauss_from_json(require_field(req, "c"));
    NormalFormOdd nf = normal_form_odd(a, b, c);
    Json j;
    if (!nf.stable) {
        j["status"] = "unstable";
        return j;
    }
    j["status"] = "stable";
    j["b_prime"] = Json::array({gauss_to_json(nf.point.b1), gauss_to_json(nf.point.b2),
                                gauss_to_json(nf.point.b3)});
    return j;
}

Json cmd_hopf_integrable(const Json& req) {
    PolyMat2 p1 = polymat_from_json(require_field(req, "phi1"));
    PolyMat2 p2 = polymat_from_json(require_field(req, "phi2"));
    Json j;
    j["integrable"] = integrability_check(p1, p2);
    return j;
}

Json cmd_hopf_h0(const Json& req) {
    HopfH0Input in;
    in.regular_generic_fibre = bool_field(req, "regular_generic_fibre");
    in.extension_of_line_bundles = bool_field_or(req, "extension_of_line_bundles", false);
    in.c2 = int_field(req, "c2");
    in.m = int_field(req, "m");
    in.ell = int_field_or(req, "ell", 0);
    Json j;
    j["h0"] = h0_to_json(h0_end0_twisted(in));
    return j;
}

SplitShape shape_from_string(const std::string& s) {
    if (s == "KplusK") return SplitShape::KplusK;
    if (s == "KplusKminusT") return SplitShape::KplusKminusT;
    if (s == "Other") return SplitShape::Other;
    throw SchemaError("e_split_shape must be KplusK, KplusKminusT or Other");
}

Json cmd_hopf_classify(const Json& req) {
    StabilityVerdict v = classify_pair(
        bool_field(req, "filtrable"), int_field(req, "c2"), bool_field(req, "phi_nonzero"),
        bool_field_or(req, "e_stable", false),
        shape_from_string(req.contains("e_split_shape")
                              ? string_field(req, "e_split_shape")
                              : std::string("Other")));
    Json j;
    j["verdict"] = to_string(v);
    return j;
}

Json cmd_hopf_example(const Json& req) {
    StableExample ex = construct_stable_example(int_field(req, "c2"));
    Json j;
    j["surface"] = surface_to_json(ex.surface);
    j["l1"] = line_bundle_to_json(ex.l1);
    j["l2"] = line_bundle_to_json(ex.l2);
    j["fibre"] = ex.fibre;
    j["deg_lambda"] = ex.deg_lambda;
    j["c2"] = ex.c2;
    j["m"] = ex.m;
    j["stable"] = ex.stable;
    j["h0_end0_twist"] = h0_to_json(ex.h0_end0_twist);
    j["higgs_family_dim"] = ex.higgs_family_dim;
    return j;
}

Json cmd_jumps_stats(const Json& req) {
    Jump jp;
    jp.at = req.contains("at") ? point_from_json(req.at("at")) : PointLabel::opaque("b");
    const Json& hs = require_field(req, "heights");
    if (!hs.is_array() || hs.empty()) throw SchemaError("heights must be a non-empty array");
    for (const auto& h : hs) jp.heights.push_back(int_from_json(h, "heights"));
    JumpStats st = jump_stats(jp);
    Json j;
    j["l"] = st.l;
    j["mu"] = st.mu;
    j["s"] = st.s;
    return j;
}

Json cmd_jumps_modify(const Json& req) {
    BundleDescriptor d = descriptor_from_json(require_field(req, "descriptor"));
    PointLabel at = point_from_json(require_field(req, "at"));
    long long deg_lambda = int_field(req, "deg_lambda");
    return descriptor_to_json(apply_modification(d, at, deg_lambda));
}

Json cmd_jumps_reduce(const Json& req) {
    BundleDescriptor d = descriptor_from_json(require_field(req, "descriptor"));
    Reduction red = reduce_jumps(d);
    Json j;
    j["clean"] = descriptor_to_json(red.clean);
    j["delta_shift"] = rational_to_json(red.delta_shift);
    Json tw = Json::array();
    for (const auto& [p, s] : red.twist) {
        Json t;
        t["at"] = point_to_json(p);
        t["mult"] = s;
        tw.push_back(t);
    }
    j["twist"] = tw;
    return j;
}

Json cmd_jumps_pushforward(const Json& req) {
    BundleDescriptor d = descriptor_from_json(require_field(req, "descriptor"));
    Pushforward pf = pushforward_and_ramification(d);
    Json j;
    j["deg_N"] = rational_to_json(pf.deg_N);
    j["deg_R"] = rational_to_json(pf.deg_R);
    j["n_sq_is_minus_r"] = pf.n_sq_is_minus_r;
    return j;
}

Json cmd_higgs_filtrable(const Json& req) {
    FiltrableInput in;
    std::string kind = string_field(req, "case");
    if (kind == "regular-generic") in.kind = FiltrableCase::RegularGeneric;
    else if (kind == "pullback-extension") in.kind = FiltrableCase::PullbackExtension;
    else if (kind == "not-extension") in.kind = FiltrableCase::NotExtension;
    else throw SchemaError("case must be regular-generic, pullback-extension or not-extension");
    long long g = int_field(req, "g");
    in.h_deg = int_field_or(req, "h_deg", 0);
    in.l_deg = int_field_or(req, "l_deg", 0);
    in.f_stable = bool_field_or(req, "f_stable", true);
    if (req.contains("flags")) in.flags = flags_from_json(req.at("flags"));
    if (in.kind == FiltrableCase::NotExtension && !req.contains("l_deg"))
        throw SchemaError("the not-extension case needs l_deg");
    Json j;
    j["h0"] = h0_to_json(filtrable_higgs_h0(in, g));
    return j;
}

Json cmd_higgs_nonfiltrable(const Json& req) {
    long long g = int_field(req, "g");
    LineBundleX lb = line_bundle_from_json(require_field(req, "delta"));
    long long c2 = int_field(req, "c2");
    SurfaceSpec s;
    s.g = g;
    validate_line_bundle(lb, s);
    NonFiltrableVerdict v = nonfiltrable_existence(g, lb, c2);
    Json j;
    j["verdict"] = to_string(v.v);
    if (v.h0) j["h0"] = h0_to_json(*v.h0);
    return j;
}

Json cmd_higgs_genus2(const Json& req) {
    G2Verdict v = g2_higgs_decide(g2_input_from_json(req));
    Json j;
    j["verdict"] = to_string(v.v);
    j["h0"] = h0_to_json(v.h0);
    j["citation"] = v.citation;
    return j;
}

Json cmd_higgs_smooth(const Json& req) {
    long long g = int_field(req, "g");
    LineBundleX lb = line_bundle_from_json(require_field(req, "delta"));
    long long c2 = int_field(req, "c2");
    SurfaceSpec s;
    s.g = g;
    validate_line_bundle(lb, s);
    std::optional<G2HiggsInput> g2;
    if (req.contains("genus2") && !req.at("genus2").is_null())
        g2 = g2_input_from_json(req.at("genus2"));
    SmoothVerdict v = smoothness_verdict(g, lb, c2, g2);
    Json j;
    j["verdict"] = to_string(v.v);
    j["reason"] = v.reason;
    return j;
}

std::vector<long long> range_from_json(const Json& j, const std::string& what) {
    std::vector<long long> out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(int_from_json(v, what));
    } else if (j.is_object()) {
        long long from = int_field(j, "from");
        long long to = int_field(j, "to");
        for (long long v = from; v <= to; ++v) out.push_back(v);
    } else {
        throw SchemaError("range '" + what + "' must be an array or {from, to}");
    }
    if (out.empty()) throw SchemaError("range '" + what + "' is empty");
    return out;
}

}  // namespace

std::string run_sweep_csv(const Json& config) {
    auto gs = range_from_json(require_field(config, "g"), "g");
    auto es = range_from_json(require_field(config, "e_inv"), "e_inv");
    auto ns = range_from_json(require_field(config, "n_delta"), "n_delta");
    auto cs = range_from_json(require_field(config, "c2"), "c2");

    std::ostringstream csv;
    csv << "g,e_inv,n_delta,c2,delta,m,floor,exists,filtrable_exists,"
           "in_nonfiltrable_range,higgs_gate,smoothness\r\n";
    for (long long g : gs)
        for (long long e : es)
            for (long long n : ns)
                for (long long c2 : cs) {
                    csv << g << "," << e << "," << n << "," << c2 << ",";
                    if (e < -g || e > 0 || n < 0) {
                        csv << ",,,,,,Invalid,Invalid\r\n";
                        continue;
                    }
                    LineBundleX lb;
                    lb.n_delta = n;
                    lb.e_inv = e;
                    RangeVerdict rv = classify_range(c2, lb);
                    GateVerdict gate = twist_gate(Rational(0), false, g, TwistKind::Cotangent);
                    std::string smooth;
                    if (g <= 1) {
                        // No stable cotangent-twisted pairs at all, so every
                        // moduli point is unobstructed.
                        smooth = to_string(Smoothness::Smooth);
                    } else {
                        smooth = to_string(smoothness_verdict(g, lb, c2).v);
                    }
                    csv << format_rational(rv.delta) << "," << format_rational(rv.m) << ","
                        << format_rational(rv.floor_) << "," << (rv.exists ? "true" : "false")
                        << "," << (rv.filtrable_exists ? "true" : "false") << ","
                        << (rv.in_nonfiltrable_range ? "true" : "false") << ","
                        << to_string(gate) << "," << smooth << "\r\n";
                }
    return csv.str();
}

Json run_command(const std::string& command, const Json& request) {
    if (command == "surface.validate") return cmd_surface_validate(request);
    if (command == "surface.degree") return cmd_surface_degree(request);
    if (command == "surface.canon") return cmd_surface_canon(request);
    if (command == "range.classify") return cmd_range_classify(request);
    if (command == "hopf.nf-even") return cmd_hopf_nf_even(request);
    if (command == "hopf.nf-odd") return cmd_hopf_nf_odd(request);
    if (command == "hopf.integrable") return cmd_hopf_integrable(request);
    if (command == "hopf.h0") return cmd_hopf_h0(request);
    if (command == "hopf.classify") return cmd_hopf_classify(request);
    if (command == "hopf.example") return cmd_hopf_example(request);
    if (command == "jumps.stats") return cmd_jumps_stats(request);
    if (command == "jumps.modify") return cmd_jumps_modify(request);
    if (command == "jumps.reduce") return cmd_jumps_reduce(request);
    if (command == "jumps.pushforward") return cmd_jumps_pushforward(request);
    if (command == "higgs.filtrable") return cmd_higgs_filtrable(request);
    if (command == "higgs.nonfiltrable") return cmd_higgs_nonfiltrable(request);
    if (command == "higgs.genus2") return cmd_higgs_genus2(request);
    if (command == "higgs.smooth") return cmd_higgs_smooth(request);
    throw SchemaError("unknown command: " + command);
}

std::vector<std::string> command_names() {
    return {"surface.validate", "surface.degree",   "surface.canon",     "range.classify",
            "hopf.nf-even",     "hopf.nf-odd",      "hopf.integrable",   "hopf.h0",
            "hopf.classify",    "hopf.example",     "jumps.stats",       "jumps.modify",
            "jumps.reduce",     "jumps.pushforward", "higgs.filtrable",  "higgs.nonfiltrable",
            "higgs.genus2",     "higgs.smooth",     "sweep"};
}

bool known_command(const std::string& command) {
    auto names = command_names();
    return std::find(names.begin(), names.end(), command) != names.end();
}

}  // namespace cohiggs
