#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rinehart/parse.hpp"
#include "rinehart/report.hpp"

namespace {

using namespace rinehart;

constexpr int kExitInvalid = 1;  // structure fails Jacobi/axiom validation
constexpr int kExitInput = 2;    // unreadable/unparseable/inconsistent input

BuiltStructure load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return build_structure(parse_structure_file(buf.str()));
}

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int cmd_check(const BuiltStructure& b) {
    CheckOutcome out = run_check(b);
    std::cout << out.text << "\n";
    return out.valid ? 0 : kExitInvalid;
}

int cmd_nakayama(const BuiltStructure& b) {
    CheckOutcome out = run_check(b);
    if (!out.valid) {
        std::cout << out.text << "\n";
        return kExitInvalid;
    }
    NakayamaResult nr = run_nakayama(b);
    if (b.kind == StructureKind::NambuHypersurface)
        std::cout << "note: generator images over the quotient; no PBW "
                     "arithmetic is defined here\n";
    std::cout << "generators:";
    for (const auto& g : nr.generators) std::cout << " " << g;
    std::cout << "\n";
    for (std::size_t i = 0; i < nr.shifts.size(); ++i)
        std::cout << "shift " << nr.generators[i] << ": "
                  << nr.shifts[i].str() << "\n";
    std::cout << "verified: " << (nr.verified ? "yes" : "no") << "\n";
    std::cout << "calabi_yau: " << (nr.calabi_yau ? "yes" : "no") << " ("
              << nr.reason << ")\n";
    return 0;
}

int cmd_bracket(const BuiltStructure& b, const std::string& expr) {
    std::string e = trim_copy(expr);
    if (e.size() < 3 || e.front() != '{' || e.back() != '}')
        throw Error("bracket expression looks like \"{f,g}\"");
    std::string inner = e.substr(1, e.size() - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
        throw Error("bracket expression needs exactly two arguments");
    Polynomial f = parse_poly(inner.substr(0, comma), b.ring);
    Polynomial g = parse_poly(inner.substr(comma + 1), b.ring);
    switch (b.kind) {
        case StructureKind::Poisson:
            std::cout << poisson_bracket(*b.poisson, f, g).str() << "\n";
            return 0;
        case StructureKind::NambuHypersurface: {
            NambuData nd = nambu_bracket(b.hyper, *b.nambu_q);
            Polynomial z(b.ring);
            std::vector<std::vector<Polynomial>> upper(
                3, std::vector<Polynomial>(3, z));
            upper[0][1] = nd.pi[0];
            upper[1][2] = nd.pi[1];
            upper[0][2] = -nd.pi[2];
            PoissonStructure ps = PoissonStructure::from_upper(b.ring, upper);
            std::cout << qreduce(b.hyper, poisson_bracket(ps, f, g)).str()
                      << "\n";
            return 0;
        }
        case StructureKind::LieRinehart:
            throw Error("bracket needs a poisson or nambu-hypersurface "
                        "structure");
    }
    return kExitInput;
}

int cmd_nf(const BuiltStructure& b, const std::string& expr) {
    if (b.kind == StructureKind::NambuHypersurface)
        throw Error("nf needs a free-basis structure (poisson or "
                    "lie-rinehart); the hypersurface module is not free");
    std::cout << parse_uexpr(expr, b.lie).str() << "\n";
    return 0;
}

int cmd_report(const BuiltStructure& b, const std::string& path,
               bool json_out) {
    nlohmann::json doc = make_report(b, path);
    if (json_out)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << render_report_text(doc);
    return doc["valid"].get<bool>() ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie-Rinehart enveloping algebras: structure validation, "
                 "PBW normal forms and Nakayama automorphisms"};
    app.require_subcommand(1);

    std::string file, expr;
    bool json_out = false;

    auto add_cmd = [&](const char* name, const char* desc, bool takes_expr) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("file", file, "structure description file")->required();
        if (takes_expr)
            c->add_option("-e,--expr", expr, "expression to evaluate")
                ->required();
        return c;
    };
    CLI::App* check = add_cmd("check", "validate the structure axioms", false);
    CLI::App* nakayama =
        add_cmd("nakayama", "compute and verify the Nakayama shifts", false);
    CLI::App* bracket =
        add_cmd("bracket", "evaluate a Poisson bracket {f,g}", true);
    CLI::App* nf = add_cmd("nf", "PBW normal form of a U-expression", true);
    CLI::App* report = add_cmd("report", "full validation report", false);
    report->add_flag("--json", json_out, "emit the JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        BuiltStructure b = load(file);
        if (check->parsed()) return cmd_check(b);
        if (nakayama->parsed()) return cmd_nakayama(b);
        if (bracket->parsed()) return cmd_bracket(b, expr);
        if (nf->parsed()) return cmd_nf(b, expr);
        if (report->parsed()) return cmd_report(b, file, json_out);
    } catch (const rinehart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
