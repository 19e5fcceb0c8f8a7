#include <doctest.h>

#include "cohiggs.h"
#include "cohiggs/errors.hpp"
#include "cohiggs/json_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <string>

using namespace cohiggs;

namespace {

struct Eval {
    int status = -1;
    std::string payload;
    std::string error;
};

Eval eval(const std::string& cmd, const std::string& req) {
    cohiggs_result* r = nullptr;
    cohiggs_eval(cmd.c_str(), req.c_str(), &r);
    Eval out;
    out.status = cohiggs_result_status(r);
    if (cohiggs_result_payload(r)) out.payload = cohiggs_result_payload(r);
    if (cohiggs_result_error(r)) out.error = cohiggs_result_error(r);
    cohiggs_result_free(r);
    return out;
}

}  // namespace

TEST_CASE("C API happy path") {
    Eval r = eval("surface.validate", R"({"g":0,"d":1,"tau_log":1})");
    CHECK(r.status == COHIGGS_OK);
    Json j = Json::parse(r.payload);
    CHECK(j["d"] == 1);
    CHECK(j["tau_log"] == "1");
}

TEST_CASE("C API error discipline") {
    Eval schema = eval("surface.validate", R"({"g":0})");
    CHECK(schema.status == COHIGGS_SCHEMA_ERROR);
    CHECK(Json::parse(schema.error)["error"] == "SchemaViolation");

    Eval domain = eval("surface.validate", R"({"g":1,"d":0,"tau_log":1})");
    CHECK(domain.status == COHIGGS_DOMAIN_ERROR);
    CHECK(Json::parse(domain.error)["error"] == "KaehlerCase");

    Eval badrat = eval("surface.validate", R"({"g":1,"d":1,"tau_log":"1/0"})");
    CHECK(badrat.status == COHIGGS_SCHEMA_ERROR);

    Eval nonjson = eval("surface.validate", "{nope");
    CHECK(nonjson.status == COHIGGS_SCHEMA_ERROR);

    Eval unknown = eval("surface.nope", "{}");
    CHECK(unknown.status == COHIGGS_SCHEMA_ERROR);

    cohiggs_result* r = nullptr;
    CHECK(cohiggs_eval(nullptr, "{}", &r) == COHIGGS_NULL_ARGUMENT);
    cohiggs_result_free(r);
    CHECK(cohiggs_eval("sweep", "{}", nullptr) == COHIGGS_NULL_ARGUMENT);
}

TEST_CASE("C API schema and command listing") {
    Json names = Json::parse(cohiggs_commands());
    CHECK(names.is_array());
    CHECK(names.size() == 19);
    for (const auto& n : names) {
        cohiggs_result* r = nullptr;
        CHECK(cohiggs_schema(n.get<std::string>().c_str(), &r) == COHIGGS_OK);
        Json sch = Json::parse(cohiggs_result_payload(r));
        CHECK(sch.contains("request"));
        CHECK(sch.contains("response"));
        cohiggs_result_free(r);
    }
    CHECK(std::string(cohiggs_version()) == "1.0.0");
}

TEST_CASE("responses validate against their published schemas") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"surface.validate", R"({"g":2,"d":3,"tau_log":"5/2"})"},
        {"surface.degree",
         R"({"surface":{"g":0,"d":1,"tau_log":1},"line_bundle":{"h_deg":2,"q":"1/2"}})"},
        {"surface.canon",
         R"({"surface":{"g":0,"d":2,"tau_log":1},"line_bundle":{"h_deg":0,"q":"-3/2"}})"},
        {"range.classify", R"({"delta":{"h_deg":0,"q":0,"n_delta":8,"e_inv":-2},"c2":-1})"},
        {"hopf.nf-even",
         R"({"a1":[[["1","0"],["0","0"]],[["0","0"],["-1","0"]]],)"
         R"("a2":[[["0","0"],["1","0"]],[["1","0"],["0","0"]]]})"},
        {"hopf.nf-even",
         R"({"a1":[[["0","0"],["1","0"]],[["0","0"],["0","0"]]],)"
         R"("a2":[[["0","0"],["5","0"]],[["0","0"],["0","0"]]]})"},
        {"hopf.nf-even",  // eigenvalue outside Q(i): coordinates carry the extension
         R"({"a1":[[["0","0"],["1","0"]],[["-2","0"],["0","0"]]],)"
         R"("a2":[[["0","0"],["1","0"]],[["1","0"],["0","0"]]]})"},
        {"hopf.nf-odd", R"({"a":[["1","0"],["0","0"]],"b":[],"c":["1","0"]})"},
        {"hopf.integrable",
         R"({"phi1":[[[],[["1","0"],["0","0"]]],[[],[]]],)"
         R"("phi2":[[[],[["0","0"],["1","0"]]],[[],[]]]})"},
        {"hopf.h0", R"({"regular_generic_fibre":true,"c2":1,"m":-1})"},
        {"hopf.classify",
         R"({"filtrable":true,"c2":0,"phi_nonzero":true,"e_split_shape":"KplusK"})"},
        {"hopf.example", R"({"c2":2})"},
        {"jumps.stats", R"({"heights":[4,2,2,1]})"},
        {"jumps.modify",
         R"({"descriptor":{"delta":{"h_deg":0,"q":0,"n_delta":0,"e_inv":0},"c2":4,)"
         R"("jumps":[{"at":"pt:b","heights":[2,1]}],"filtrable":false},)"
         R"("at":"pt:b","deg_lambda":-2})"},
        {"jumps.reduce",
         R"({"descriptor":{"delta":{"h_deg":0,"q":0,"n_delta":0,"e_inv":0},"c2":9,)"
         R"("jumps":[{"at":"pt:b","heights":[4,2,2,1]}],"filtrable":false}})"},
        {"jumps.pushforward",
         R"({"descriptor":{"delta":{"h_deg":0,"q":0,"n_delta":8,"e_inv":-2},"c2":-3,)"
         R"("jumps":[],"filtrable":false}})"},
        {"higgs.filtrable", R"({"case":"regular-generic","g":2,"h_deg":-1})"},
        {"higgs.nonfiltrable", R"({"g":2,"delta":{"h_deg":0,"q":0,"n_delta":4,"e_inv":0},"c2":-1})"},
        {"higgs.genus2",
         R"({"e_inv":-2,"k":0,"jumps":[],"R":[{"at":{"generic":"a","sheet":"+"},"mult":1},)"
         R"({"at":{"generic":"a","sheet":"-"},"mult":1},{"at":{"generic":"b","sheet":"+"},"mult":1},)"
         R"({"at":{"generic":"b","sheet":"-"},"mult":1}],"N":[{"at":"W1","mult":-2}]})"},
        {"higgs.smooth", R"({"g":2,"delta":{"h_deg":0,"q":0,"n_delta":4,"e_inv":0},"c2":-1})"},
    };
    for (const auto& [cmd, req] : cases) {
        CAPTURE(cmd);
        Json request = Json::parse(req);
        Json sch = command_schema(cmd);
        CHECK_NOTHROW(validate_schema(sch["request"], request));
        Json resp = run_command(cmd, request);
        CHECK_NOTHROW(validate_schema(sch["response"], resp));
    }
}

TEST_CASE("spec wire examples") {
    // genus-2 theorem clause (2) through the wire
    Json smooth = run_command(
        "higgs.smooth",
        Json::parse(R"({"g":2,"delta":{"h_deg":0,"q":0,"n_delta":4,"e_inv":0},"c2":-1})"));
    CHECK(smooth["verdict"] == "NotSmooth");

    // the nilpotent (x, y) pair is integrable
    Json integrable = run_command(
        "hopf.integrable",
        Json::parse(R"({"phi1":[[[],[["1","0"],["0","0"]]],[[],[]]],)"
                    R"("phi2":[[[],[["0","0"],["1","0"]]],[[],[]]]})"));
    CHECK(integrable["integrable"] == true);
}

TEST_CASE("sweep CSV") {
    Json cfg = Json::parse(
        R"({"g":[2],"e_inv":[-2,-1,0],"n_delta":[4],"c2":{"from":0,"to":3}})");
    std::string csv = run_sweep_csv(cfg);
    // header + 12 rows
    size_t rows = 0;
    for (size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++rows;
    CHECK(rows == 13);
    CHECK(csv.rfind("g,e_inv,n_delta,c2,", 0) == 0);

    // single point grid
    Json one = Json::parse(R"({"g":[0],"e_inv":[0],"n_delta":[0],"c2":[1]})");
    std::string csv1 = run_sweep_csv(one);
    CHECK(csv1.find("NoStablePairs") != std::string::npos);
    CHECK(csv1.find("Smooth") != std::string::npos);

    // empty grid is a schema violation
    Eval empty = eval("sweep", R"({"g":[],"e_inv":[0],"n_delta":[0],"c2":[0]})");
    CHECK(empty.status == COHIGGS_SCHEMA_ERROR);

    // grid points violating -g <= e <= 0 are reported, not fatal
    Json bad = Json::parse(R"({"g":[0],"e_inv":[-2],"n_delta":[0],"c2":[0]})");
    CHECK(run_sweep_csv(bad).find("Invalid") != std::string::npos);
}

TEST_CASE("CLI end-to-end") {
    const char* cli = std::getenv("COHIGGS_CLI");
    if (!cli) return;  // only run when ctest provides the binary

    auto run = [&](const std::string& args, const std::string& input) {
        std::string in_file = "/tmp/cohiggs_in.json";
        {
            std::ofstream f(in_file, std::ios::binary);
            f << input;
        }
        std::string cmdline = std::string(cli) + " " + args + " --in " + in_file + " 2>/dev/null";
        FILE* p = popen(cmdline.c_str(), "r");
        REQUIRE(p);
        std::string out;
        std::array<char, 4096> buf;
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
        int code = pclose(p);
        return std::make_pair(WEXITSTATUS(code), out);
    };

    auto [code, out] = run("surface validate", R"({"g":0,"d":1,"tau_log":1})");
    CHECK(code == 0);
    CHECK(Json::parse(out)["g"] == 0);

    // deterministic byte-identical output
    auto second = run("surface validate", R"({"g":0,"d":1,"tau_log":1})");
    CHECK(second.second == out);

    auto [kcode, kout] = run("surface validate", R"({"g":1,"d":0,"tau_log":1})");
    CHECK(kcode == 3);
    CHECK(kout.empty());

    auto [scode, sout] = run("surface validate", R"({"g":1,"d":1,"tau_log":"1/0"})");
    CHECK(scode == 2);

    auto [swcode, swout] =
        run("sweep", R"({"g":[2],"e_inv":[-2],"n_delta":[4],"c2":[0]})");
    CHECK(swcode == 0);
    CHECK(swout.rfind("g,e_inv,", 0) == 0);

    auto [gcode, gout] = run("--schema higgs.genus2 jumps stats", R"({"heights":[1]})");
    CHECK(gcode == 0);
    CHECK(Json::parse(gout).contains("request"));
}

TEST_CASE("JSON round trips for core values") {
    LineBundleX lb{3, Rational(-5, 4), 2, -1, "u"};
    Json j = line_bundle_to_json(lb);
    LineBundleX back = line_bundle_from_json(j);
    CHECK(back.h_deg == lb.h_deg);
    CHECK(back.q == lb.q);
    CHECK(back.n_delta == lb.n_delta);
    CHECK(back.e_inv == lb.e_inv);
    CHECK(back.phase == lb.phase);

    PointLabel w = PointLabel::weierstrass(4);
    PointLabel g = PointLabel::generic("a", false);
    PointLabel o = PointLabel::opaque("fibre-3");
    for (const auto& p : {w, g, o}) CHECK(point_from_json(point_to_json(p)) == p);

    DivisorG2 d;
    d.add(w, 2);
    d.add(g, -1);
    CHECK(divisor_from_json(divisor_to_json(d)) == d);

    CHECK(rational_from_json(Json(-7)) == Rational(-7));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), SchemaError);
}
