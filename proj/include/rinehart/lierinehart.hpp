#ifndef RINEHART_LIERINEHART_HPP
#define RINEHART_LIERINEHART_HPP

#include <memory>
#include <string>
#include <vector>

#include "rinehart/poly.hpp"

namespace rinehart {

/// A Lie-Rinehart algebra (S, L) with L free over S on a finite basis
/// (a_1,...,a_d). Stored data:
///   anchor[i][m]   -- coefficient of d/dx_m in the derivation of a_i
///   structure[i][j][k] -- coefficient of a_j in [a_i, a_k]
/// Antisymmetry structure[i][j][k] = -structure[k][j][i] is expected but
/// deliberately not enforced here; validate_lie_rinehart reports it.
struct FreeLieRinehart {
    RingPtr ring;
    std::vector<std::string> names;  // generator names, size d
    std::vector<std::vector<Polynomial>> anchor;  // d x n
    std::vector<std::vector<std::vector<Polynomial>>> structure;  // d x d x d

    std::size_t rank() const { return names.size(); }
};

using LiePtr = std::shared_ptr<const FreeLieRinehart>;

/// Builds the algebra after shape/ring checks (not the axiom checks).
LiePtr make_free_lie_rinehart(
    RingPtr ring, std::vector<std::string> names,
    std::vector<std::vector<Polynomial>> anchor,
    std::vector<std::vector<std::vector<Polynomial>>> structure);

/// Abelian L of rank d with zero anchor.
LiePtr make_abelian(const RingPtr& ring, std::size_t d);

/// Element sum f_i a_i of L.
struct LElement {
    std::vector<Polynomial> coeffs;
};

/// Element sum g_j a_j^* of the dual module L^v.
struct DualForm {
    std::vector<Polynomial> coeffs;
};

LElement lelement_zero(const LiePtr& lr);
LElement lelement_basis(const LiePtr& lr, std::size_t i);
bool lelement_is_zero(const LElement& a);
bool lelement_equal(const LElement& a, const LElement& b);
LElement lelement_add(const LElement& a, const LElement& b);
LElement lelement_scale(const Polynomial& f, const LElement& a);
std::string lelement_str(const LiePtr& lr, const LElement& a);

struct ValidationResult {
    bool ok = true;
    std::string reason;  // first violated identity, with indices
};

/// Checks (a) structure-tensor antisymmetry, (b) the Jacobi identity on
/// basis triples, (c) that the anchor is a Lie algebra homomorphism
/// (commutators of the basis derivations agree with the bracket, tested
/// on each ring variable).
ValidationResult validate_lie_rinehart(const LiePtr& lr);

/// Derivation of the basis element a_i applied to s.
Polynomial anchor_apply_basis(const LiePtr& lr, std::size_t i,
                              const Polynomial& s);
/// (sum f_i a_i)(s)
Polynomial anchor_apply(const LiePtr& lr, const LElement& a,
                        const Polynomial& s);

/// [a, b] with the Leibniz rule [f a_i, g a_k] =
/// fg [a_i,a_k] + f a_i(g) a_k - g a_k(f) a_i, extended bilinearly.
LElement bracket_elements(const LiePtr& lr, const LElement& a,
                          const LElement& b);
/// [a_i, a_k] as an LElement.
LElement bracket_basis(const LiePtr& lr, std::size_t i, std::size_t k);

/// Lie derivative of a dual form along the basis element a_i:
/// lambda_i(a_j^*) = -sum_k structure[i][j][k] a_k^*, extended as a
/// derivation over coefficient scaling.
DualForm lie_derivative_dual(const LiePtr& lr, std::size_t i,
                             const DualForm& phi);

/// Trace of ad_{a_i}: sum_j structure[i][j][j].
Polynomial trace_ad_basis(const LiePtr& lr, std::size_t i);
/// Trace map on a general element via lambda(s a) = s lambda(a) - a(s):
/// lambda(sum f_i a_i) = sum_i (f_i tr_i - a_i(f_i)).
Polynomial trace_ad(const LiePtr& lr, const LElement& a);

}  // namespace rinehart

#endif
