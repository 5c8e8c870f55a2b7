#ifndef RINEHART_STRUCTFILE_HPP
#define RINEHART_STRUCTFILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rinehart/hypersurface.hpp"
#include "rinehart/lierinehart.hpp"
#include "rinehart/poisson.hpp"

namespace rinehart {

/// Sectioned key-value text, INI style:
///   [ring]                      -- required, first
///   variables = x, y
///   characteristic = 0          -- 0 or a prime
///   order = grevlex             -- optional: grevlex | lex
///   [poisson]                   -- exactly one structure section
///   bracket.x.y = x*y
/// '#' starts a comment; polynomial values use the expression grammar.
struct StructureFile {
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };
    std::vector<Section> sections;
};

StructureFile parse_structure_file(std::string_view text);

enum class StructureKind { Poisson, LieRinehart, NambuHypersurface };

std::string kind_name(StructureKind k);

/// Semantic build: declared ring plus the structure object. Construction
/// failures (bad characteristic, non-unit t, polynomials that do not
/// parse) throw and are reported as input errors by the CLI.
struct BuiltStructure {
    StructureKind kind;
    RingPtr ring;
    std::optional<PoissonStructure> poisson;
    LiePtr lie;                        // set for poisson and lie-rinehart
    HyperPtr hyper;                    // set for nambu-hypersurface
    std::optional<Polynomial> nambu_q; // set for nambu-hypersurface
};

BuiltStructure build_structure(const StructureFile& file);

}  // namespace rinehart

#endif
