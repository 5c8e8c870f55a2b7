#ifndef RINEHART_REPORT_HPP
#define RINEHART_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "rinehart/nakayama.hpp"
#include "rinehart/structfile.hpp"

namespace rinehart {

/// Validation verdict for any structure kind.
struct CheckOutcome {
    bool valid = true;
    std::string text;       // human-readable lines
    nlohmann::json witness; // null when valid
};

/// poisson: Jacobi on variable triples; lie-rinehart: axiom validation;
/// nambu-hypersurface: quotient invariants were checked at build time,
/// here the induced bracket's Jacobi identity mod P.
CheckOutcome run_check(const BuiltStructure& b);

/// Nakayama computation for the structure kind; throws when the
/// structure is invalid (callers run run_check first).
NakayamaResult run_nakayama(const BuiltStructure& b);

/// The full JSON document emitted by `report`. Deterministic for
/// identical input; every polynomial is printed canonically and
/// re-parses to the same value.
nlohmann::json make_report(const BuiltStructure& b,
                           const std::string& source_name);

/// Text rendering of the same content.
std::string render_report_text(const nlohmann::json& report);

}  // namespace rinehart

#endif
