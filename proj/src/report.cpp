#include "rinehart/report.hpp"

#include <chrono>

namespace rinehart {

using nlohmann::json;

CheckOutcome run_check(const BuiltStructure& b) {
    CheckOutcome out;
    switch (b.kind) {
        case StructureKind::Poisson: {
            JacobiResult j = check_jacobi(*b.poisson);
            if (j.ok) {
                out.text = "jacobi: pass";
            } else {
                const auto& vars = b.ring->variables;
                out.valid = false;
                out.text = "jacobi: fail\nwitness: (" + vars[j.witness[0]] +
                           ", " + vars[j.witness[1]] + ", " +
                           vars[j.witness[2]] + ")\njacobiator: " +
                           j.defect.str();
                out.witness = {{"triple",
                                {vars[j.witness[0]], vars[j.witness[1]],
                                 vars[j.witness[2]]}},
                               {"jacobiator", j.defect.str()}};
            }
            if (b.ring->nvars() == 3) {
                // scalar triple product of the defining vector field; a
                // fast integrability criterion only, the jacobiator verdict
                // above is authoritative
                Vec3 pv = make_vec3(b.poisson->pi(1, 2), b.poisson->pi(2, 0),
                                    b.poisson->pi(0, 1));
                out.text += "\ntriple product P.curl(P): " +
                            dot(pv, curl(pv)).str() + " (advisory)";
            }
            return out;
        }
        case StructureKind::LieRinehart: {
            ValidationResult v = validate_lie_rinehart(b.lie);
            if (v.ok) {
                out.text = "axioms: pass";
            } else {
                out.valid = false;
                out.text = "axioms: fail\nreason: " + v.reason;
                out.witness = {{"reason", v.reason}};
            }
            return out;
        }
        case StructureKind::NambuHypersurface: {
            // quotient invariants hold (construction succeeded); check the
            // induced bracket really is Poisson on the quotient
            NambuData nd = nambu_bracket(b.hyper, *b.nambu_q);
            Polynomial z(b.ring);
            std::vector<std::vector<Polynomial>> upper(
                3, std::vector<Polynomial>(3, z));
            upper[0][1] = nd.pi[0];
            upper[1][2] = nd.pi[1];
            upper[0][2] = -nd.pi[2];
            PoissonStructure ps = PoissonStructure::from_upper(b.ring, upper);
            Polynomial jac = qreduce(
                b.hyper, jacobiator(ps, Polynomial::variable(b.ring, 0),
                                    Polynomial::variable(b.ring, 1),
                                    Polynomial::variable(b.ring, 2)));
            out.text = "quotient: valid (t = " + b.hyper->t.str() + ")";
            if (jac.is_zero()) {
                out.text += "\njacobi mod P: pass";
            } else {
                out.valid = false;
                out.text += "\njacobi mod P: fail\njacobiator: " + jac.str();
                out.witness = {{"triple", json::array({b.ring->variables[0],
                                                       b.ring->variables[1],
                                                       b.ring->variables[2]})},
                               {"jacobiator", jac.str()}};
            }
            return out;
        }
    }
    throw DomainError("unreachable");
}

NakayamaResult run_nakayama(const BuiltStructure& b) {
    switch (b.kind) {
        case StructureKind::Poisson: return nakayama_poisson(*b.poisson);
        case StructureKind::LieRinehart: return nakayama_free(b.lie);
        case StructureKind::NambuHypersurface:
            return nakayama_hypersurface(b.hyper, *b.nambu_q);
    }
    throw DomainError("unreachable");
}

namespace {

json echo_input(const BuiltStructure& b, const std::string& source_name) {
    json ring = {{"variables", b.ring->variables},
                 {"characteristic", b.ring->field.characteristic()},
                 {"order", b.ring->order == MonomialOrder::GrevLex
                               ? "grevlex"
                               : "lex"}};
    json structure;
    switch (b.kind) {
        case StructureKind::Poisson: {
            json brackets = json::object();
            for (std::size_t i = 0; i < b.ring->nvars(); ++i)
                for (std::size_t j = i + 1; j < b.ring->nvars(); ++j) {
                    if (b.poisson->pi(i, j).is_zero()) continue;
                    brackets["{" + b.ring->variables[i] + "," +
                             b.ring->variables[j] + "}"] =
                        b.poisson->pi(i, j).str();
                }
            structure = {{"brackets", brackets}};
            break;
        }
        case StructureKind::LieRinehart: {
            json anchor = json::array();
            for (const auto& row : b.lie->anchor) {
                json r = json::array();
                for (const auto& p : row) r.push_back(p.str());
                anchor.push_back(r);
            }
            json brackets = json::object();
            for (std::size_t i = 0; i < b.lie->rank(); ++i)
                for (std::size_t k = i + 1; k < b.lie->rank(); ++k) {
                    LElement br = bracket_basis(b.lie, i, k);
                    if (lelement_is_zero(br)) continue;
                    brackets["[" + b.lie->names[i] + "," + b.lie->names[k] +
                             "]"] = lelement_str(b.lie, br);
                }
            structure = {{"rank", b.lie->rank()},
                         {"generators", b.lie->names},
                         {"anchor", anchor},
                         {"brackets", brackets}};
            break;
        }
        case StructureKind::NambuHypersurface: {
            structure = {{"P", b.hyper->P.str()},
                         {"weights", b.hyper->weights},
                         {"t", b.hyper->t.str()},
                         {"Q", b.nambu_q->str()}};
            break;
        }
    }
    return {{"file", source_name},
            {"kind", kind_name(b.kind)},
            {"ring", ring},
            {"structure", structure}};
}

}  // namespace

json make_report(const BuiltStructure& b, const std::string& source_name) {
    auto started = std::chrono::steady_clock::now();
    json doc;
    doc["input"] = echo_input(b, source_name);
    CheckOutcome check = run_check(b);
    doc["valid"] = check.valid;
    doc["witness"] = check.witness;
    if (check.valid) {
        NakayamaResult nr = run_nakayama(b);
        json shifts = json::array();
        for (const auto& s : nr.shifts) shifts.push_back(s.str());
        doc["nakayama"] = {{"generators", nr.generators},
                           {"shifts", shifts},
                           {"verified", nr.verified}};
        doc["calabi_yau"] = {{"value", nr.calabi_yau}, {"reason", nr.reason}};
    } else {
        doc["nakayama"] = nullptr;
        doc["calabi_yau"] = nullptr;
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    return doc;
}

std::string render_report_text(const json& doc) {
    std::string out;
    out += "input: " + doc["input"]["kind"].get<std::string>() + " over ";
    const auto& ring = doc["input"]["ring"];
    out += ring["characteristic"].get<std::uint64_t>() == 0
               ? "QQ"
               : "GF(" + std::to_string(
                             ring["characteristic"].get<std::uint64_t>()) +
                     ")";
    out += "[";
    bool first = true;
    for (const auto& v : ring["variables"]) {
        if (!first) out += ",";
        out += v.get<std::string>();
        first = false;
    }
    out += "]\n";
    out += std::string("valid: ") +
           (doc["valid"].get<bool>() ? "yes" : "no") + "\n";
    if (!doc["witness"].is_null())
        out += "witness: " + doc["witness"].dump() + "\n";
    if (!doc["nakayama"].is_null()) {
        const auto& nk = doc["nakayama"];
        for (std::size_t i = 0; i < nk["generators"].size(); ++i)
            out += "shift " + nk["generators"][i].get<std::string>() + ": " +
                   nk["shifts"][i].get<std::string>() + "\n";
        out += std::string("verified: ") +
               (nk["verified"].get<bool>() ? "yes" : "no") + "\n";
        out += std::string("calabi_yau: ") +
               (doc["calabi_yau"]["value"].get<bool>() ? "yes" : "no") +
               " (" + doc["calabi_yau"]["reason"].get<std::string>() + ")\n";
    }
    return out;
}

}  // namespace rinehart
