#ifndef RINEHART_POISSON_HPP
#define RINEHART_POISSON_HPP

#include <array>
#include <optional>
#include <vector>

#include "rinehart/lierinehart.hpp"
#include "rinehart/poly.hpp"

namespace rinehart {

/// Poisson structure on a polynomial ring, given by the antisymmetric
/// matrix pi[i][j] = {x_i, x_j}. Antisymmetry is checked at construction.
class PoissonStructure {
public:
    /// entries[i][j] for i < j only; the rest is filled by antisymmetry.
    static PoissonStructure from_upper(
        const RingPtr& ring,
        const std::vector<std::vector<Polynomial>>& upper);
    /// full matrix; throws DomainError unless antisymmetric with zero
    /// diagonal
    static PoissonStructure from_matrix(
        const RingPtr& ring, std::vector<std::vector<Polynomial>> pi);

    const RingPtr& ring() const { return ring_; }
    const Polynomial& pi(std::size_t i, std::size_t j) const {
        return pi_[i][j];
    }
    std::size_t nvars() const { return ring_->nvars(); }

private:
    PoissonStructure(RingPtr ring, std::vector<std::vector<Polynomial>> pi)
        : ring_(std::move(ring)), pi_(std::move(pi)) {}
    RingPtr ring_;
    std::vector<std::vector<Polynomial>> pi_;
};

/// {f,g} = sum_{i,j} pi_ij df/dx_i dg/dx_j
Polynomial poisson_bracket(const PoissonStructure& ps, const Polynomial& f,
                           const Polynomial& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
Polynomial jacobiator(const PoissonStructure& ps, const Polynomial& f,
                      const Polynomial& g, const Polynomial& h);

struct JacobiResult {
    bool ok = true;
    std::array<std::size_t, 3> witness{};  // variable indices, when !ok
    Polynomial defect;                     // nonzero jacobiator, when !ok
    explicit JacobiResult(Polynomial d) : defect(std::move(d)) {}
};

/// Evaluates the jacobiator on every variable triple i<j<k. Vanishing
/// there settles the Jacobi identity for all arguments, since the
/// jacobiator of a biderivation bracket is a derivation in each slot.
JacobiResult check_jacobi(const PoissonStructure& ps);

/// Triple of polynomials over one 3-variable ring.
struct Vec3 {
    RingPtr ring;
    std::array<Polynomial, 3> c;
};

Vec3 make_vec3(const Polynomial& a, const Polynomial& b, const Polynomial& c);
Vec3 vec3_zero(const RingPtr& ring);
bool vec3_equal(const Vec3& u, const Vec3& v);

Polynomial dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
Vec3 grad(const Polynomial& f);  // 3-variable ring required
Vec3 curl(const Vec3& v);

/// Divergence of the derivation sum g_m d/dx_m against the standard
/// volume form dx_1 ^ ... ^ dx_n.
Polynomial div_std(const std::vector<Polynomial>& components);

/// {x,y} = P_z, {y,z} = P_x, {z,x} = P_y
PoissonStructure poisson3d_from_vector(const Vec3& pvec);

/// Hamiltonian derivation {x_i,-} as components over d/dx_1..d/dx_n.
std::vector<Polynomial> hamiltonian_components(const PoissonStructure& ps,
                                               std::size_t i);

/// If curl(v) = 0, the potential Q with grad(Q) = v and zero constant
/// term, via the radial homotopy; otherwise nullopt. Rationals only.
std::optional<Polynomial> recover_potential(const Vec3& v);

/// The Lie-Rinehart algebra (S, Omega) of the bracket: basis d<var>,
/// anchor row i = (pi_i1,...,pi_in), [dx_i, dx_j] = sum_k dpi_ij/dx_k dx_k.
LiePtr to_lie_rinehart(const PoissonStructure& ps);

}  // namespace rinehart

#endif
