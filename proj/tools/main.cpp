// cohiggs CLI: every library operation as a subcommand with JSON on
// stdin/stdout (CSV for sweep). Links only the C API.

#include <CLI11.hpp>

#include "cohiggs.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& in_file) {
    if (!in_file.empty()) {
        std::ifstream f(in_file);
        if (!f) {
            std::cerr << "{\"error\": \"SchemaViolation\", \"detail\": \"cannot open " << in_file
                      << "\"}\n";
            std::exit(2);
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

int emit(cohiggs_result* result, const std::string& out_file) {
    int code = static_cast<int>(cohiggs_result_status(result));
    if (code == COHIGGS_OK) {
        const char* payload = cohiggs_result_payload(result);
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            f << payload;
        } else {
            std::cout << payload;
        }
    } else {
        const char* err = cohiggs_result_error(result);
        if (err) std::cerr << err;
    }
    cohiggs_result_free(result);
    return code;
}

std::string dotted(const std::string& group, const std::string& sub) { return group + "." + sub; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of Higgs and co-Higgs bundles on non-Kaehler "
                 "principal elliptic surfaces"};
    app.require_subcommand(0, 1);

    std::string in_file, out_file, schema_for;
    app.add_option("--in", in_file, "read the JSON request from a file instead of stdin");
    app.add_option("--out", out_file, "write the result to a file instead of stdout");
    app.add_option("--schema", schema_for,
                   "print the JSON schema of a command (e.g. \"hopf.nf-even\") and exit");

    struct Cmd {
        const char* group;
        const char* sub;
        const char* help;
    };
    const Cmd cmds[] = {
        {"surface", "validate", "check surface invariants (rejects the Kaehler case d = 0)"},
        {"surface", "degree", "exact degree of a torsion line bundle"},
        {"surface", "canon", "canonical representative with q in [0, 1)"},
        {"range", "classify", "existence / filtrable / non-filtrable range flags"},
        {"hopf", "nf-even", "normal form of a constant sl2 pair (even component)"},
        {"hopf", "nf-odd", "normal form of the odd-component field (b' = cb + a^2)"},
        {"hopf", "integrable", "wedge-vanishing test for a pair of polynomial matrices"},
        {"hopf", "h0", "h^0(End0 E(T)) on a Hopf surface by case"},
        {"hopf", "classify", "stability verdict for a co-Higgs pair"},
        {"hopf", "example", "stable co-Higgs bundle recipe for a given c2 >= 1"},
        {"jumps", "stats", "length, multiplicity and distinct heights of a jump"},
        {"jumps", "modify", "elementary modification along a fibre"},
        {"jumps", "reduce", "remove all jumps; discriminant shift and untwisting divisor"},
        {"jumps", "pushforward", "deg N and deg R of the spectral data"},
        {"higgs", "filtrable", "Higgs-field dimensions for filtrable bundles (g >= 2)"},
        {"higgs", "nonfiltrable", "existence table in the non-filtrable range"},
        {"higgs", "genus2", "full genus-2 Higgs decision procedure"},
        {"higgs", "smooth", "moduli smoothness verdict"},
    };

    std::string selected;
    std::map<std::string, CLI::App*> groups;
    for (const auto& c : cmds) {
        CLI::App* g = nullptr;
        auto it = groups.find(c.group);
        if (it == groups.end()) {
            g = app.add_subcommand(c.group, std::string(c.group) + " operations");
            g->require_subcommand(1);
            g->fallthrough();
            groups[c.group] = g;
        } else {
            g = it->second;
        }
        std::string name = dotted(c.group, c.sub);
        CLI::App* leaf = g->add_subcommand(c.sub, c.help);
        leaf->fallthrough();
        leaf->callback([&selected, name] { selected = name; });
    }
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep emitting a CSV verdict table");
    sweep->fallthrough();
    sweep->callback([&selected] { selected = "sweep"; });

    CLI11_PARSE(app, argc, argv);

    if (!schema_for.empty()) {
        // Accept "higgs genus2" as well as "higgs.genus2".
        std::string name = schema_for;
        for (auto& ch : name)
            if (ch == ' ') ch = '.';
        cohiggs_result* result = nullptr;
        cohiggs_schema(name.c_str(), &result);
        return emit(result, out_file);
    }
    if (selected.empty()) {
        std::cerr << app.help();
        return 2;
    }

    std::string request = read_input(in_file);
    cohiggs_result* result = nullptr;
    cohiggs_eval(selected.c_str(), request.c_str(), &result);
    return emit(result, out_file);
}
