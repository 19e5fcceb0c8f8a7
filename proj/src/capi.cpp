#include "cohiggs.h"

#include "cohiggs/errors.hpp"
#include "cohiggs/json_io.hpp"

#include <new>
#include <string>

struct cohiggs_result {
    cohiggs_status status = COHIGGS_OK;
    std::string payload;
    std::string error;
};

namespace {

using cohiggs::Json;

cohiggs_result* make_error(cohiggs_status st, const std::string& name,
                           const std::string& detail) {
    auto* r = new cohiggs_result;
    r->status = st;
    Json e;
    e["error"] = name;
    e["detail"] = detail;
    r->error = e.dump(2) + "\n";
    return r;
}

cohiggs_status run(const char* command, const char* request_json, cohiggs_result** out,
                   bool schema_only) {
    if (!out) return COHIGGS_NULL_ARGUMENT;
    *out = nullptr;
    if (!command || (!schema_only && !request_json)) {
        *out = make_error(COHIGGS_NULL_ARGUMENT, "NullArgument", "command and request required");
        return COHIGGS_NULL_ARGUMENT;
    }
    try {
        std::string payload;
        if (schema_only) {
            payload = cohiggs::command_schema(command).dump(2) + "\n";
        } else {
            Json request = Json::parse(std::string(request_json), nullptr, true);
            if (std::string(command) == "sweep") {
                payload = cohiggs::run_sweep_csv(request);
            } else {
                payload = cohiggs::run_command(command, request).dump(2) + "\n";
            }
        }
        auto* r = new cohiggs_result;
        r->status = COHIGGS_OK;
        r->payload = std::move(payload);
        *out = r;
        return COHIGGS_OK;
    } catch (const Json::parse_error& e) {
        *out = make_error(COHIGGS_SCHEMA_ERROR, "SchemaViolation", e.what());
        return COHIGGS_SCHEMA_ERROR;
    } catch (const cohiggs::SchemaError& e) {
        *out = make_error(COHIGGS_SCHEMA_ERROR, "SchemaViolation", e.what());
        return COHIGGS_SCHEMA_ERROR;
    } catch (const cohiggs::DomainError& e) {
        *out = make_error(COHIGGS_DOMAIN_ERROR, e.name(), e.what());
        return COHIGGS_DOMAIN_ERROR;
    } catch (const std::bad_alloc&) {
        return COHIGGS_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        *out = make_error(COHIGGS_INTERNAL_ERROR, "InternalError", e.what());
        return COHIGGS_INTERNAL_ERROR;
    }
}

}  // namespace

extern "C" {

cohiggs_status cohiggs_eval(const char* command, const char* request_json,
                            cohiggs_result** out) {
    return run(command, request_json, out, false);
}

cohiggs_status cohiggs_schema(const char* command, cohiggs_result** out) {
    return run(command, nullptr, out, true);
}

cohiggs_status cohiggs_result_status(const cohiggs_result* result) {
    return result ? result->status : COHIGGS_NULL_ARGUMENT;
}

const char* cohiggs_result_payload(const cohiggs_result* result) {
    if (!result || result->status != COHIGGS_OK) return nullptr;
    return result->payload.c_str();
}

const char* cohiggs_result_error(const cohiggs_result* result) {
    if (!result || result->status == COHIGGS_OK) return nullptr;
    return result->error.c_str();
}

void cohiggs_result_free(cohiggs_result* result) { delete result; }

const char* cohiggs_commands(void) {
    static const std::string names = [] {
        Json j = Json::array();
        for (const auto& n : cohiggs::command_names()) j.push_back(n);
        return j.dump();
    }();
    return names.c_str();
}

const char* cohiggs_version(void) { return "1.0.0"; }

}  // extern "C"
