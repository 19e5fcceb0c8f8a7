#include "cohiggs/errors.hpp"
#include "cohiggs/json_io.hpp"

namespace cohiggs {

namespace {

Json rat() { return Json{{"oneOf", Json::array({Json{{"type", "integer"}}, Json{{"type", "string"}}})}}; }
Json integer() { return Json{{"type", "integer"}}; }
Json boolean() { return Json{{"type", "boolean"}}; }
Json str() { return Json{{"type", "string"}}; }

Json arr(Json items, int min = -1, int max = -1) {
    Json j{{"type", "array"}, {"items", std::move(items)}};
    if (min >= 0) j["minItems"] = min;
    if (max >= 0) j["maxItems"] = max;
    return j;
}

Json obj(Json props, Json required, bool open = false) {
    Json j{{"type", "object"}, {"properties", std::move(props)}, {"required", std::move(required)}};
    if (!open) j["additionalProperties"] = false;
    return j;
}

Json enum_of(std::initializer_list<const char*> vals) {
    Json j;
    j["enum"] = Json::array();
    for (auto v : vals) j["enum"].push_back(v);
    return j;
}

Json one_of(std::initializer_list<Json> alts) {
    Json j;
    j["oneOf"] = Json::array();
    for (const auto& a : alts) j["oneOf"].push_back(a);
    return j;
}

Json pair_schema() { return arr(rat(), 2, 2); }
Json mat_schema() { return arr(arr(pair_schema(), 2, 2), 2, 2); }
Json poly_schema() { return arr(pair_schema()); }
Json polymat_schema() { return arr(arr(poly_schema(), 2, 2), 2, 2); }

Json tower_schema() {
    return obj({{"base", pair_schema()}, {"ext", pair_schema()}, {"theta", pair_schema()}},
               Json::array({"base"}));
}

Json tower_mat_schema() { return arr(arr(tower_schema(), 2, 2), 2, 2); }

Json point_schema() {
    return one_of({str(), obj({{"generic", str()}, {"sheet", enum_of({"+", "-"})}},
                              Json::array({"generic", "sheet"}))});
}

Json divisor_schema() {
    return arr(obj({{"at", point_schema()}, {"mult", integer()}}, Json::array({"at", "mult"})));
}

Json surface_schema() {
    return obj({{"g", integer()}, {"d", integer()}, {"tau_log", rat()}},
               Json::array({"g", "d", "tau_log"}));
}

Json line_bundle_schema() {
    return obj({{"h_deg", integer()},
                {"q", rat()},
                {"n_delta", integer()},
                {"e_inv", integer()},
                {"phase", str()}},
               Json::array({"h_deg", "q"}));
}

Json jump_schema() {
    return obj({{"at", point_schema()}, {"heights", arr(integer(), 1)}},
               Json::array({"at", "heights"}));
}

Json descriptor_schema() {
    return obj({{"delta", line_bundle_schema()},
                {"c2", integer()},
                {"jumps", arr(jump_schema())},
                {"filtrable", boolean()},
                {"regular_generic_fibre", boolean()}},
               Json::array({"delta", "c2"}));
}

Json h0_schema() {
    return one_of({obj({{"kind", enum_of({"exact"})}, {"value", integer()}},
                       Json::array({"kind", "value"})),
                   obj({{"kind", enum_of({"interval"})}, {"lo", integer()}, {"hi", integer()}},
                       Json::array({"kind", "lo", "hi"})),
                   obj({{"kind", enum_of({"undecidable"})}, {"note", str()}},
                       Json::array({"kind", "note"}))});
}

Json flags_schema() {
    return obj({{"is_canonical", boolean()},
                {"is_trivial", boolean()},
                {"is_effective", boolean()},
                {"generic", boolean()}},
               Json::array());
}

Json g2_schema() {
    return obj({{"e_inv", integer()},
                {"k", integer()},
                {"jumps", arr(jump_schema())},
                {"R", divisor_schema()},
                {"N", divisor_schema()}},
               Json::array({"e_inv", "k", "R"}));
}

Json range_schema() {
    return one_of({arr(integer(), 1),
                   obj({{"from", integer()}, {"to", integer()}}, Json::array({"from", "to"}))});
}

Json range_verdict_schema() {
    return obj({{"exists", boolean()},
                {"filtrable_exists", boolean()},
                {"in_nonfiltrable_range", boolean()},
                {"delta", str()},
                {"m", str()},
                {"floor", str()}},
               Json::array({"exists", "filtrable_exists", "in_nonfiltrable_range", "delta", "m",
                            "floor"}));
}

}  // namespace

Json command_schema(const std::string& command) {
    Json req, resp;
    if (command == "surface.validate") {
        req = surface_schema();
        resp = obj({{"g", integer()}, {"d", integer()}, {"tau_log", str()}},
                   Json::array({"g", "d", "tau_log"}));
    } else if (command == "surface.degree") {
        req = obj({{"surface", surface_schema()}, {"line_bundle", line_bundle_schema()}},
                  Json::array({"surface", "line_bundle"}));
        resp = obj({{"degree", str()}}, Json::array({"degree"}));
    } else if (command == "surface.canon") {
        req = obj({{"surface", surface_schema()}, {"line_bundle", line_bundle_schema()}},
                  Json::array({"surface", "line_bundle"}));
        resp = obj({{"h_deg", integer()},
                    {"q", str()},
                    {"n_delta", integer()},
                    {"e_inv", integer()},
                    {"phase", str()}},
                   Json::array({"h_deg", "q", "n_delta", "e_inv"}));
    } else if (command == "range.classify") {
        req = obj({{"delta", line_bundle_schema()}, {"c2", integer()}, {"g", integer()}},
                  Json::array({"delta", "c2"}));
        resp = range_verdict_schema();
    } else if (command == "hopf.nf-even") {
        req = obj({{"a1", mat_schema()}, {"a2", mat_schema()}}, Json::array({"a1", "a2"}));
        resp = one_of(
            {obj({{"status", enum_of({"stable"})},
                  {"point", obj({{"t_sq", pair_schema()}, {"s", tower_schema()}, {"v", tower_schema()}},
                                Json::array({"t_sq", "s", "v"}))},
                  {"certificate", tower_mat_schema()},
                  {"normal_form", obj({{"a1", tower_mat_schema()}, {"a2", tower_mat_schema()}},
                                      Json::array({"a1", "a2"}))}},
                 Json::array({"status", "point", "certificate", "normal_form"})),
             obj({{"status", enum_of({"unstable"})},
                  {"common_eigenvector", arr(tower_schema(), 2, 2)}},
                 Json::array({"status", "common_eigenvector"}))});
    } else if (command == "hopf.nf-odd") {
        req = obj({{"a", poly_schema()}, {"b", poly_schema()}, {"c", pair_schema()}},
                  Json::array({"a", "b", "c"}));
        resp = one_of({obj({{"status", enum_of({"stable"})}, {"b_prime", arr(pair_schema(), 3, 3)}},
                           Json::array({"status", "b_prime"})),
                       obj({{"status", enum_of({"unstable"})}}, Json::array({"status"}))});
    } else if (command == "hopf.integrable") {
        req = obj({{"phi1", polymat_schema()}, {"phi2", polymat_schema()}},
                  Json::array({"phi1", "phi2"}));
        resp = obj({{"integrable", boolean()}}, Json::array({"integrable"}));
    } else if (command == "hopf.h0") {
        req = obj({{"regular_generic_fibre", boolean()},
                   {"extension_of_line_bundles", boolean()},
                   {"c2", integer()},
                   {"m", integer()},
                   {"ell", integer()}},
                  Json::array({"regular_generic_fibre", "c2", "m"}));
        resp = obj({{"h0", h0_schema()}}, Json::array({"h0"}));
    } else if (command == "hopf.classify") {
        req = obj({{"filtrable", boolean()},
                   {"c2", integer()},
                   {"phi_nonzero", boolean()},
                   {"e_stable", boolean()},
                   {"e_split_shape", enum_of({"KplusK", "KplusKminusT", "Other"})}},
                  Json::array({"filtrable", "c2", "phi_nonzero"}));
        resp = obj({{"verdict", enum_of({"OnlyZeroHiggs", "StablePair", "NotStable",
                                         "StableCapable", "NoStableHiggs"})}},
                   Json::array({"verdict"}));
    } else if (command == "hopf.example") {
        req = obj({{"c2", integer()}}, Json::array({"c2"}));
        resp = obj({{"surface", obj({{"g", integer()}, {"d", integer()}, {"tau_log", str()}},
                                    Json::array({"g", "d", "tau_log"}))},
                    {"l1", line_bundle_schema()},
                    {"l2", line_bundle_schema()},
                    {"fibre", str()},
                    {"deg_lambda", integer()},
                    {"c2", integer()},
                    {"m", integer()},
                    {"stable", boolean()},
                    {"h0_end0_twist", h0_schema()},
                    {"higgs_family_dim", integer()}},
                   Json::array({"surface", "l1", "l2", "fibre", "deg_lambda", "c2", "m", "stable",
                                "h0_end0_twist", "higgs_family_dim"}),
                   true);
    } else if (command == "jumps.stats") {
        req = obj({{"at", point_schema()}, {"heights", arr(integer(), 1)}},
                  Json::array({"heights"}));
        resp = obj({{"l", integer()}, {"mu", integer()}, {"s", integer()}},
                   Json::array({"l", "mu", "s"}));
    } else if (command == "jumps.modify") {
        req = obj({{"descriptor", descriptor_schema()}, {"at", point_schema()},
                   {"deg_lambda", integer()}},
                  Json::array({"descriptor", "at", "deg_lambda"}));
        resp = descriptor_schema();
    } else if (command == "jumps.reduce") {
        req = obj({{"descriptor", descriptor_schema()}}, Json::array({"descriptor"}));
        resp = obj({{"clean", descriptor_schema()},
                    {"delta_shift", str()},
                    {"twist", divisor_schema()}},
                   Json::array({"clean", "delta_shift", "twist"}));
    } else if (command == "jumps.pushforward") {
        req = obj({{"descriptor", descriptor_schema()}}, Json::array({"descriptor"}));
        resp = obj({{"deg_N", str()}, {"deg_R", str()}, {"n_sq_is_minus_r", boolean()}},
                   Json::array({"deg_N", "deg_R", "n_sq_is_minus_r"}));
    } else if (command == "higgs.filtrable") {
        req = obj({{"case", enum_of({"regular-generic", "pullback-extension", "not-extension"})},
                   {"g", integer()},
                   {"h_deg", integer()},
                   {"l_deg", integer()},
                   {"f_stable", boolean()},
                   {"flags", flags_schema()}},
                  Json::array({"case", "g"}));
        resp = obj({{"h0", h0_schema()}}, Json::array({"h0"}));
    } else if (command == "higgs.nonfiltrable") {
        req = obj({{"g", integer()}, {"delta", line_bundle_schema()}, {"c2", integer()}},
                  Json::array({"g", "delta", "c2"}));
        resp = obj({{"verdict", enum_of({"Exists", "NotGuaranteed", "None"})}, {"h0", h0_schema()}},
                   Json::array({"verdict"}));
    } else if (command == "higgs.genus2") {
        req = g2_schema();
        resp = obj({{"verdict", enum_of({"HiggsExists", "NoHiggs", "Undecidable"})},
                    {"h0", h0_schema()},
                    {"citation", str()}},
                   Json::array({"verdict", "h0", "citation"}));
    } else if (command == "higgs.smooth") {
        req = obj({{"g", integer()},
                   {"delta", line_bundle_schema()},
                   {"c2", integer()},
                   {"genus2", g2_schema()}},
                  Json::array({"g", "delta", "c2"}));
        resp = obj({{"verdict", enum_of({"NotSmooth", "Smooth", "Unknown"})}, {"reason", str()}},
                   Json::array({"verdict", "reason"}));
    } else if (command == "sweep") {
        req = obj({{"g", range_schema()},
                   {"e_inv", range_schema()},
                   {"n_delta", range_schema()},
                   {"c2", range_schema()}},
                  Json::array({"g", "e_inv", "n_delta", "c2"}));
        resp = Json{{"type", "string"}, {"description", "RFC 4180 CSV"}};
    } else {
        throw SchemaError("unknown command: " + command);
    }
    Json j;
    j["command"] = command;
    j["request"] = req;
    j["response"] = resp;
    return j;
}

void validate_schema(const Json& schema, const Json& value, const std::string& path) {
    if (schema.contains("oneOf")) {
        for (const auto& alt : schema.at("oneOf")) {
            try {
                validate_schema(alt, value, path);
                return;
            } catch (const SchemaError&) {
            }
        }
        throw SchemaError(path + ": no alternative matched");
    }
    if (schema.contains("enum")) {
        for (const auto& v : schema.at("enum"))
            if (v == value) return;
        throw SchemaError(path + ": value not in enum");
    }
    std::string type = schema.value("type", "");
    if (type == "object") {
        if (!value.is_object()) throw SchemaError(path + ": expected object");
        if (schema.contains("required"))
            for (const auto& k : schema.at("required"))
                if (!value.contains(k.get<std::string>()))
                    throw SchemaError(path + ": missing required field " + k.get<std::string>());
        const Json props = schema.value("properties", Json::object());
        bool closed = schema.contains("additionalProperties") &&
                      schema.at("additionalProperties") == Json(false);
        for (const auto& [k, v] : value.items()) {
            if (props.contains(k)) {
                validate_schema(props.at(k), v, path + "." + k);
            } else if (closed) {
                throw SchemaError(path + ": unexpected field " + k);
            }
        }
    } else if (type == "array") {
        if (!value.is_array()) throw SchemaError(path + ": expected array");
        if (schema.contains("minItems") && value.size() < schema.at("minItems").get<size_t>())
            throw SchemaError(path + ": too few items");
        if (schema.contains("maxItems") && value.size() > schema.at("maxItems").get<size_t>())
            throw SchemaError(path + ": too many items");
        if (schema.contains("items")) {
            size_t i = 0;
            for (const auto& v : value) validate_schema(schema.at("items"), v, path + "[" + std::to_string(i++) + "]");
        }
    } else if (type == "integer") {
        if (!value.is_number_integer()) throw SchemaError(path + ": expected integer");
    } else if (type == "string") {
        if (!value.is_string()) throw SchemaError(path + ": expected string");
    } else if (type == "boolean") {
        if (!value.is_boolean()) throw SchemaError(path + ": expected boolean");
    }
}

}  // namespace cohiggs
