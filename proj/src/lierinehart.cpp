#include "rinehart/lierinehart.hpp"

#include <set>

namespace rinehart {

LiePtr make_free_lie_rinehart(
    RingPtr ring, std::vector<std::string> names,
    std::vector<std::vector<Polynomial>> anchor,
    std::vector<std::vector<std::vector<Polynomial>>> structure) {
    const std::size_t d = names.size();
    const std::size_t n = ring->nvars();
    if (d == 0) throw DomainError("Lie-Rinehart basis must be nonempty");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != d) throw DomainError("duplicate generator names");
    if (anchor.size() != d)
        throw DomainError("anchor must have one row per generator");
    for (const auto& row : anchor) {
        if (row.size() != n)
            throw DomainError("anchor row length must match variable count");
        for (const auto& p : row) require_same_ring(p.ring(), ring);
    }
    if (structure.size() != d)
        throw DomainError("structure tensor must be d x d x d");
    for (const auto& plane : structure) {
        if (plane.size() != d)
            throw DomainError("structure tensor must be d x d x d");
        for (const auto& row : plane) {
            if (row.size() != d)
                throw DomainError("structure tensor must be d x d x d");
            for (const auto& p : row) require_same_ring(p.ring(), ring);
        }
    }
    return std::make_shared<const FreeLieRinehart>(FreeLieRinehart{
        std::move(ring), std::move(names), std::move(anchor),
        std::move(structure)});
}

LiePtr make_abelian(const RingPtr& ring, std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i)
        names.push_back("a" + std::to_string(i + 1));
    Polynomial z(ring);
    std::vector<std::vector<Polynomial>> anchor(
        d, std::vector<Polynomial>(ring->nvars(), z));
    std::vector<std::vector<std::vector<Polynomial>>> structure(
        d, std::vector<std::vector<Polynomial>>(
               d, std::vector<Polynomial>(d, z)));
    return make_free_lie_rinehart(ring, std::move(names), std::move(anchor),
                                  std::move(structure));
}

LElement lelement_zero(const LiePtr& lr) {
    return LElement{std::vector<Polynomial>(lr->rank(), Polynomial(lr->ring))};
}

LElement lelement_basis(const LiePtr& lr, std::size_t i) {
    LElement a = lelement_zero(lr);
    a.coeffs[i] = Polynomial::constant(lr->ring, 1);
    return a;
}

bool lelement_is_zero(const LElement& a) {
    for (const auto& c : a.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool lelement_equal(const LElement& a, const LElement& b) {
    return a.coeffs == b.coeffs;
}

LElement lelement_add(const LElement& a, const LElement& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw MismatchError("L-elements of different rank");
    LElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

LElement lelement_scale(const Polynomial& f, const LElement& a) {
    LElement r = a;
    for (auto& c : r.coeffs) c = f * c;
    return r;
}

std::string lelement_str(const LiePtr& lr, const LElement& a) {
    std::string out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = a.coeffs[i].str();
        if (cs == "1")
            out += lr->names[i];
        else
            out += "(" + cs + ")*" + lr->names[i];
    }
    return out.empty() ? "0" : out;
}

static void check_index(const LiePtr& lr, std::size_t i) {
    if (i >= lr->rank()) throw DomainError("basis index out of range");
}

Polynomial anchor_apply_basis(const LiePtr& lr, std::size_t i,
                              const Polynomial& s) {
    check_index(lr, i);
    require_same_ring(lr->ring, s.ring());
    Polynomial r(lr->ring);
    for (std::size_t m = 0; m < lr->ring->nvars(); ++m)
        r += lr->anchor[i][m] * s.derivative(m);
    return r;
}

Polynomial anchor_apply(const LiePtr& lr, const LElement& a,
                        const Polynomial& s) {
    Polynomial r(lr->ring);
    for (std::size_t i = 0; i < lr->rank(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        r += a.coeffs[i] * anchor_apply_basis(lr, i, s);
    }
    return r;
}

LElement bracket_basis(const LiePtr& lr, std::size_t i, std::size_t k) {
    check_index(lr, i);
    check_index(lr, k);
    LElement r = lelement_zero(lr);
    for (std::size_t j = 0; j < lr->rank(); ++j)
        r.coeffs[j] = lr->structure[i][j][k];
    return r;
}

LElement bracket_elements(const LiePtr& lr, const LElement& a,
                          const LElement& b) {
    const std::size_t d = lr->rank();
    if (a.coeffs.size() != d || b.coeffs.size() != d)
        throw MismatchError("L-element rank mismatch");
    LElement r = lelement_zero(lr);
    for (std::size_t i = 0; i < d; ++i) {
        const Polynomial& f = a.coeffs[i];
        for (std::size_t k = 0; k < d; ++k) {
            const Polynomial& g = b.coeffs[k];
            if (!f.is_zero() && !g.is_zero()) {
                Polynomial fg = f * g;
                for (std::size_t j = 0; j < d; ++j)
                    r.coeffs[j] += fg * lr->structure[i][j][k];
            }
            if (!f.is_zero()) r.coeffs[k] += f * anchor_apply_basis(lr, i, g);
            if (!g.is_zero()) r.coeffs[i] -= g * anchor_apply_basis(lr, k, f);
        }
    }
    return r;
}

ValidationResult validate_lie_rinehart(const LiePtr& lr) {
    const std::size_t d = lr->rank();
    const std::size_t n = lr->ring->nvars();
    // (a) the structure tensor is alternating: s^i_{j,k} = -s^k_{j,i} and
    // the diagonal vanishes outright (the latter is not implied by the
    // former in characteristic 2)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                bool bad = i == k ? !lr->structure[i][j][i].is_zero()
                                  : lr->structure[i][j][k] !=
                                        -lr->structure[k][j][i];
                if (bad) {
                    return {false,
                            "antisymmetry violated at (i,j,k) = (" +
                                std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," +
                                std::to_string(k + 1) + ")"};
                }
            }
    // (b) Jacobi identity on basis triples
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                LElement ai = lelement_basis(lr, i);
                LElement aj = lelement_basis(lr, j);
                LElement ak = lelement_basis(lr, k);
                LElement jac = bracket_elements(lr, ai, bracket_elements(lr, aj, ak));
                jac = lelement_add(jac, bracket_elements(lr, aj, bracket_elements(lr, ak, ai)));
                jac = lelement_add(jac, bracket_elements(lr, ak, bracket_elements(lr, ai, aj)));
                if (!lelement_is_zero(jac)) {
                    return {false,
                            "Jacobi identity fails on basis triple (" +
                                std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," +
                                std::to_string(k + 1) + "): defect " +
                                lelement_str(lr, jac)};
                }
            }
    // (c) the anchor is a homomorphism of Lie algebras; derivations agree
    // iff they agree on the ring variables
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i + 1; k < d; ++k) {
            LElement br = bracket_basis(lr, i, k);
            for (std::size_t m = 0; m < n; ++m) {
                Polynomial xm = Polynomial::variable(lr->ring, m);
                Polynomial lhs =
                    anchor_apply_basis(lr, i, anchor_apply_basis(lr, k, xm)) -
                    anchor_apply_basis(lr, k, anchor_apply_basis(lr, i, xm));
                Polynomial rhs = anchor_apply(lr, br, xm);
                if (lhs != rhs) {
                    return {false,
                            "anchor fails to respect the bracket on (" +
                                std::to_string(i + 1) + "," +
                                std::to_string(k + 1) + ") applied to " +
                                lr->ring->variables[m] + ": " + lhs.str() +
                                " vs " + rhs.str()};
                }
            }
        }
    return {true, ""};
}

DualForm lie_derivative_dual(const LiePtr& lr, std::size_t i,
                             const DualForm& phi) {
    check_index(lr, i);
    const std::size_t d = lr->rank();
    if (phi.coeffs.size() != d) throw MismatchError("dual form rank mismatch");
    DualForm r{std::vector<Polynomial>(d, Polynomial(lr->ring))};
    for (std::size_t k = 0; k < d; ++k) {
        r.coeffs[k] = anchor_apply_basis(lr, i, phi.coeffs[k]);
        for (std::size_t j = 0; j < d; ++j)
            r.coeffs[k] -= phi.coeffs[j] * lr->structure[i][j][k];
    }
    return r;
}

Polynomial trace_ad_basis(const LiePtr& lr, std::size_t i) {
    check_index(lr, i);
    Polynomial r(lr->ring);
    for (std::size_t j = 0; j < lr->rank(); ++j) r += lr->structure[i][j][j];
    return r;
}

Polynomial trace_ad(const LiePtr& lr, const LElement& a) {
    Polynomial r(lr->ring);
    for (std::size_t i = 0; i < lr->rank(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        r += a.coeffs[i] * trace_ad_basis(lr, i) -
             anchor_apply_basis(lr, i, a.coeffs[i]);
    }
    return r;
}

}  // namespace rinehart
