#include "rinehart/structfile.hpp"

#include <algorithm>

#include "rinehart/parse.hpp"

namespace rinehart {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, at - start)));
        start = at + 1;
    }
}

}  // namespace

StructureFile parse_structure_file(std::string_view text) {
    StructureFile file;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = eol == std::string_view::npos
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw DomainError("line " + std::to_string(line_no) +
                                  ": unterminated section header");
            file.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        if (file.sections.empty())
            throw DomainError("line " + std::to_string(line_no) +
                              ": entry outside any [section]");
        file.sections.back().entries.emplace_back(trim(line.substr(0, eq)),
                                                  trim(line.substr(eq + 1)));
    }
    return file;
}

std::string kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Poisson: return "poisson";
        case StructureKind::LieRinehart: return "lie-rinehart";
        case StructureKind::NambuHypersurface: return "nambu-hypersurface";
    }
    return "?";
}

namespace {

const StructureFile::Section* find_section(const StructureFile& f,
                                           const std::string& name) {
    for (const auto& s : f.sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::optional<std::string> find_entry(const StructureFile::Section& s,
                                      const std::string& key) {
    for (const auto& [k, v] : s.entries)
        if (k == key) return v;
    return std::nullopt;
}

unsigned long long parse_uint(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + " must be a nonnegative "
                          "integer, got '" + text + "'");
    }
}

long parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + " must be an integer, got '" +
                          text + "'");
    }
}

RingPtr build_ring(const StructureFile& f) {
    const auto* rs = find_section(f, "ring");
    if (!rs) throw DomainError("missing [ring] section");
    auto vars_text = find_entry(*rs, "variables");
    if (!vars_text) throw DomainError("[ring] needs 'variables'");
    std::vector<std::string> vars = split(*vars_text, ',');
    auto char_text = find_entry(*rs, "characteristic");
    if (!char_text) throw DomainError("[ring] needs 'characteristic'");
    unsigned long long p = parse_uint(*char_text, "characteristic");
    CoefficientField field = p == 0 ? CoefficientField::rationals()
                                    : CoefficientField::prime_field(p);
    MonomialOrder order = MonomialOrder::GrevLex;
    if (auto o = find_entry(*rs, "order")) {
        if (*o == "grevlex")
            order = MonomialOrder::GrevLex;
        else if (*o == "lex")
            order = MonomialOrder::Lex;
        else
            throw DomainError("unknown monomial order '" + *o + "'");
    }
    return make_ring(std::move(vars), field, order);
}

BuiltStructure build_poisson(const RingPtr& ring,
                             const StructureFile::Section& sec) {
    const std::size_t n = ring->nvars();
    Polynomial z(ring);
    std::vector<std::vector<Polynomial>> upper(n,
                                               std::vector<Polynomial>(n, z));
    for (const auto& [key, value] : sec.entries) {
        std::vector<std::string> parts = split(key, '.');
        if (parts.size() != 3 || parts[0] != "bracket")
            throw DomainError("[poisson] entries look like 'bracket.x.y'; "
                              "got '" + key + "'");
        std::size_t i = ring->var_index(parts[1]);
        std::size_t j = ring->var_index(parts[2]);
        if (i == PolyRing::npos || j == PolyRing::npos)
            throw DomainError("unknown variable in bracket key '" + key + "'");
        if (i == j)
            throw DomainError("bracket of a variable with itself is zero; "
                              "omit '" + key + "'");
        Polynomial val = parse_poly(value, ring);
        if (i < j)
            upper[i][j] = val;
        else
            upper[j][i] = -val;
    }
    BuiltStructure b{StructureKind::Poisson, ring,
                     PoissonStructure::from_upper(ring, upper), nullptr,
                     nullptr, std::nullopt};
    b.lie = to_lie_rinehart(*b.poisson);
    return b;
}

BuiltStructure build_lie_rinehart(const RingPtr& ring,
                                  const StructureFile::Section& sec) {
    auto rank_text = find_entry(sec, "rank");
    if (!rank_text) throw DomainError("[lie-rinehart] needs 'rank'");
    std::size_t d = parse_uint(*rank_text, "rank");
    if (d == 0) throw DomainError("rank must be positive");
    const std::size_t n = ring->nvars();
    Polynomial z(ring);
    std::vector<std::vector<Polynomial>> anchor(d,
                                                std::vector<Polynomial>(n, z));
    std::vector<std::vector<std::vector<Polynomial>>> structure(
        d, std::vector<std::vector<Polynomial>>(
               d, std::vector<Polynomial>(d, z)));
    auto parse_list = [&](const std::string& value, std::size_t want,
                          const std::string& what) {
        std::vector<std::string> parts = split(value, ',');
        if (parts.size() != want)
            throw DomainError(what + " needs " + std::to_string(want) +
                              " comma-separated polynomials");
        std::vector<Polynomial> out;
        for (const auto& p : parts) out.push_back(parse_poly(p, ring));
        return out;
    };
    for (const auto& [key, value] : sec.entries) {
        if (key == "rank") continue;
        std::vector<std::string> parts = split(key, '.');
        if (parts.size() == 2 && parts[0] == "anchor") {
            std::size_t i = parse_uint(parts[1], "anchor index");
            if (i < 1 || i > d) throw DomainError("anchor index out of range");
            anchor[i - 1] = parse_list(value, n, "anchor row");
        } else if (parts.size() == 3 && parts[0] == "bracket") {
            std::size_t i = parse_uint(parts[1], "bracket index");
            std::size_t k = parse_uint(parts[2], "bracket index");
            if (i < 1 || i > d || k < 1 || k > d || i == k)
                throw DomainError("bracket indices out of range in '" + key +
                                  "'");
            std::vector<Polynomial> row =
                parse_list(value, d, "bracket coefficient list");
            for (std::size_t j = 0; j < d; ++j) {
                structure[i - 1][j][k - 1] = row[j];
                structure[k - 1][j][i - 1] = -row[j];
            }
        } else {
            throw DomainError("unknown [lie-rinehart] key '" + key + "'");
        }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i)
        names.push_back("a" + std::to_string(i + 1));
    BuiltStructure b{StructureKind::LieRinehart, ring, std::nullopt,
                     make_free_lie_rinehart(ring, std::move(names),
                                            std::move(anchor),
                                            std::move(structure)),
                     nullptr, std::nullopt};
    return b;
}

BuiltStructure build_hypersurface(const RingPtr& ring,
                                  const StructureFile::Section& sec) {
    auto p_text = find_entry(sec, "P");
    auto w_text = find_entry(sec, "weights");
    auto q_text = find_entry(sec, "Q");
    if (!p_text || !w_text || !q_text)
        throw DomainError("[nambu-hypersurface] needs 'P', 'weights', 'Q'");
    std::vector<std::string> ws = split(*w_text, ',');
    if (ws.size() != 3) throw DomainError("'weights' needs three integers");
    std::array<long, 3> weights{};
    for (std::size_t i = 0; i < 3; ++i)
        weights[i] = parse_int(ws[i], "weight");
    Polynomial P = parse_poly(*p_text, ring);
    Polynomial Q = parse_poly(*q_text, ring);
    BuiltStructure b{StructureKind::NambuHypersurface, ring, std::nullopt,
                     nullptr, make_quotient(ring, P, weights), Q};
    return b;
}

}  // namespace

BuiltStructure build_structure(const StructureFile& file) {
    RingPtr ring = build_ring(file);
    const StructureFile::Section* found = nullptr;
    StructureKind kind = StructureKind::Poisson;
    for (const auto& s : file.sections) {
        StructureKind k;
        if (s.name == "poisson")
            k = StructureKind::Poisson;
        else if (s.name == "lie-rinehart")
            k = StructureKind::LieRinehart;
        else if (s.name == "nambu-hypersurface")
            k = StructureKind::NambuHypersurface;
        else if (s.name == "ring")
            continue;
        else
            throw DomainError("unknown section [" + s.name + "]");
        if (found) throw DomainError("more than one structure section");
        found = &s;
        kind = k;
    }
    if (!found) throw DomainError("missing structure section");
    switch (kind) {
        case StructureKind::Poisson: return build_poisson(ring, *found);
        case StructureKind::LieRinehart:
            return build_lie_rinehart(ring, *found);
        case StructureKind::NambuHypersurface:
            return build_hypersurface(ring, *found);
    }
    throw DomainError("unreachable");
}

}  // namespace rinehart
