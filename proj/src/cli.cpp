// Subcommand surface: homology, verify-dsquare, verify-moves,
// analyze-config, moduli-boundary, moduli-type, multivalued, census.

#include "tkh/cli.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tkh/jsonio.h"
#include "tkh/moduli.h"

namespace tkh {
namespace {

using nlohmann::json;

// Internal control-flow error carrying the exit code.
struct CliFailure {
    int code;
    std::string error, detail;
};

[[noreturn]] void flag_error(const std::string& detail) {
    throw CliFailure{1, "BAD_FLAG", detail};
}

long long parse_int(const std::string& s) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        flag_error("not an integer: " + s);
    }
    if (pos != s.size()) flag_error("not an integer: " + s);
    return v;
}

// --pairing l0=left,lalpha=right,q=lambdabar ; --lambda p,q
Pairing build_pairing(const std::string& pairing_str,
                      const std::string& lambda_str, bool need_lambda) {
    Pairing p;
    if (!pairing_str.empty()) {
        std::stringstream ss(pairing_str);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                flag_error("--pairing entries look like key=value");
            std::string k = item.substr(0, eq), v = item.substr(eq + 1);
            if (k == "l0" || k == "lalpha") {
                Side s = Side::Right;
                if (v == "left")
                    s = Side::Left;
                else if (v != "right")
                    flag_error("pairing side must be left or right");
                (k == "l0" ? p.l0 : p.lalpha) = s;
            } else if (k == "q") {
                if (v == "lambda")
                    p.q = Slope::Lambda;
                else if (v == "lambdabar")
                    p.q = Slope::LambdaBar;
                else
                    flag_error("pairing slope must be lambda or lambdabar");
            } else {
                flag_error("unknown pairing key: " + k);
            }
        }
    }
    if (!lambda_str.empty()) {
        auto comma = lambda_str.find(',');
        if (comma == std::string::npos)
            flag_error("--lambda looks like p,q");
        p.lambda = {parse_int(lambda_str.substr(0, comma)),
                    parse_int(lambda_str.substr(comma + 1))};
        if (p.lambda.is_zero()) flag_error("--lambda must be nonzero");
    } else if (need_lambda) {
        throw CliFailure{1, "MISSING_LAMBDA",
                         "--lambda p,q is required for torus inputs"};
    }
    return p;
}

Diagram load_valid_diagram(const std::string& path) {
    Diagram d = load_diagram(path);
    ValidationReport rep = validate(d);
    if (!rep.pass) throw CliFailure{1, rep.code, rep.detail};
    return d;
}

json classes_json(const std::vector<IVec>& classes) {
    json a = json::array();
    for (const IVec& c : classes) a.push_back(json::array({c.a, c.b}));
    return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int run_parsed(const std::string& cmd, const std::string& file,
               const std::string& file2, const std::string& pairing_str,
               const std::string& lambda_str, std::ostream& out) {
    if (cmd == "homology") {
        Diagram d = load_valid_diagram(file);
        out << report_json(compute_homology(d));
        return 0;
    }
    if (cmd == "verify-dsquare") {
        Diagram d = load_valid_diagram(file);
        bool ok = verify_dsquare(d);
        emit(out, json{{"ok", ok}});
        return ok ? 0 : 1;
    }
    if (cmd == "verify-moves") {
        Diagram a = load_valid_diagram(file);
        Diagram b = load_valid_diagram(file2);
        InvarianceReport rep = verify_invariance(a, b);
        emit(out, json{{"equal", rep.equal}});
        return 0;
    }
    if (cmd == "analyze-config") {
        Decorated dec = load_decorated(file);
        int index = dec.config.index();
        int mult = multiplicity_bruteforce(dec);
        json j{{"index", index}, {"multiplicity", mult}};
        if (index == 2 || index == 3) {
            CaseTag tag =
                index == 2 ? classify_index2(dec) : classify_index3(dec);
            j["case"] = tag.tag;
            j["classes"] = classes_json(tag.classes);
        } else {
            j["case"] = nullptr;
            j["classes"] = json::array();
        }
        emit(out, j);
        return 0;
    }
    if (cmd == "moduli-boundary") {
        Decorated dec = load_decorated(file);
        Pairing p = build_pairing(pairing_str, lambda_str,
                                  dec.config.genus == 1);
        BoundaryGraph g = boundary_graph(dec, p);
        emit(out, json{{"cycles", g.cycles}});
        return 0;
    }
    if (cmd == "moduli-type") {
        Diagram d = load_valid_diagram(file);
        Pairing p = build_pairing(pairing_str, lambda_str, d.genus == 1);
        char t = moduli_system_type(d, p);
        emit(out, json{{"type", std::string(1, t)}});
        return 0;
    }
    if (cmd == "multivalued") {
        Decorated dec = load_decorated(file);
        Pairing p = build_pairing(pairing_str, lambda_str,
                                  dec.config.genus == 1);
        json entries = json::array();
        for (const MultivaluedEntry& e : enumerate_multivalued(dec, p)) {
            json ej{{"choices", e.choices}, {"cycles", e.cycles}};
            entries.push_back(ej);
        }
        emit(out, json{{"entries", entries}});
        return 0;
    }
    if (cmd == "census") {
        Decorated dec = load_decorated(file);
        Pairing p = build_pairing(pairing_str, lambda_str,
                                  dec.config.genus == 1);
        Census c = index4_face_census(dec, p);
        json faces = json::array();
        for (const CensusFace& f : c.faces) {
            faces.push_back(json{{"type", f.type},
                                 {"classes", classes_json(f.classes)},
                                 {"count", f.count}});
        }
        emit(out, json{{"faces", faces}, {"branch_points", c.branch_points}});
        return 0;
    }
    throw CliFailure{1, "BAD_FLAG", "unknown command: " + cmd};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Homotopical Khovanov homology of links in the thickened "
                 "torus"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd = nullptr;
        std::string file, file2, pairing, lambda;
    };
    std::map<std::string, Sub> subs;

    auto add_cmd = [&](const std::string& name, const std::string& desc,
                       int files, bool pairing_flags) {
        Sub& s = subs[name];
        s.cmd = app.add_subcommand(name, desc);
        s.cmd->add_option("file", s.file, "input JSON file")->required();
        if (files == 2)
            s.cmd->add_option("file2", s.file2, "second input JSON file")
                ->required();
        if (pairing_flags) {
            s.cmd->add_option("--pairing", s.pairing,
                              "l0=S,lalpha=S,q=T with S in {left,right}, T "
                              "in {lambda,lambdabar}");
            s.cmd->add_option("--lambda", s.lambda,
                              "primitive class p,q (required on the torus)");
        }
    };

    add_cmd("homology", "homology of a diagram, as a canonical report", 1,
            false);
    add_cmd("verify-dsquare", "check that the differential squares to zero",
            1, false);
    add_cmd("verify-moves", "compare the homology of two diagrams", 2,
            false);
    add_cmd("analyze-config",
            "index, multiplicity and case of a decorated configuration", 1,
            false);
    add_cmd("moduli-boundary",
            "boundary cycles of an index-3 decorated configuration", 1,
            true);
    add_cmd("moduli-type", "C or D: whether any boundary covering branches",
            1, true);
    add_cmd("multivalued",
            "boundary cycles under every independent matching choice", 1,
            true);
    add_cmd("census", "DQ / DQ' face tallies of an index-4 configuration",
            1, true);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const Sub& s = subs.at(name);
    try {
        return run_parsed(name, s.file, s.file2, s.pairing, s.lambda, out);
    } catch (const CliFailure& f) {
        emit(out, json{{"error", f.error}, {"detail", f.detail}});
        return f.code;
    } catch (const TkhError& e) {
        emit(out, json{{"error", e.code}, {"detail", e.what()}});
        return (e.code == "IO_ERROR" || e.code == "PARSE_ERROR") ? 2 : 1;
    }
}

}  // namespace tkh
