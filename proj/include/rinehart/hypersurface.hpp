#ifndef RINEHART_HYPERSURFACE_HPP
#define RINEHART_HYPERSURFACE_HPP

#include <array>
#include <memory>
#include <vector>

#include "rinehart/poly.hpp"

namespace rinehart {

/// S = k[x,y,z]/(P) with P = 1 + T, T weighted-homogeneous for integer
/// weights (p,q,r) of unit weighted degree t. Construction verifies the
/// shape, the uniformity of the weighted degree, the invertibility of t,
/// and the Euler identity p x P_x + q y P_y + r z P_z = -t mod P.
struct HypersurfaceRing {
    RingPtr ambient;  // exactly 3 variables
    Polynomial P;
    std::array<long, 3> weights;    // integer weights as given
    std::array<Scalar, 3> weights_f;  // cast into the field
    Scalar t;                       // common weighted degree, a unit
    std::array<Polynomial, 3> dP;   // P_x, P_y, P_z
};

using HyperPtr = std::shared_ptr<const HypersurfaceRing>;

HyperPtr make_quotient(const RingPtr& ambient, const Polynomial& P,
                       const std::array<long, 3>& weights);

/// Normal form modulo the principal ideal (P) under the ring's order.
Polynomial qreduce(const HyperPtr& h, const Polynomial& f);
bool qequal(const HyperPtr& h, const Polynomial& f, const Polynomial& g);

/// Exterior form of degree 0..3 on free-module representatives with
/// mod-P-reduced coefficients. Component bases in fixed order:
///   degree 1: dx, dy, dz
///   degree 2: dy^dz, dz^dx, dx^dy
///   degree 3: dx^dy^dz
/// Representative equality is NOT quotient equality; use kform_equiv.
struct KForm {
    HyperPtr h;
    int degree;
    std::vector<Polynomial> comps;  // size 1, 3, 3, 1 by degree
};

KForm kform(const HyperPtr& h, int degree, std::vector<Polynomial> comps);
KForm kform_zero(const HyperPtr& h, int degree);
/// the coordinate 1-form d<var>
KForm kform_dvar(const HyperPtr& h, std::size_t var);
/// omega_S = px dy^dz + qy dz^dx + rz dx^dy
KForm volume_form(const HyperPtr& h);
/// dP as a 1-form
KForm dP_form(const HyperPtr& h);

/// Derivation of the quotient ring: images of (x,y,z), required to
/// preserve the ideal: d(P) = 0 mod P (checked).
struct HDerivation {
    HyperPtr h;
    std::array<Polynomial, 3> on;
};

HDerivation make_derivation(const HyperPtr& h,
                            const std::array<Polynomial, 3>& images);
/// delta_x = (0, P_z, -P_y), delta_y = (-P_z, 0, P_x),
/// delta_z = (P_y, -P_x, 0); each has d(P) = 0 identically.
std::array<HDerivation, 3> coordinate_derivations(const HyperPtr& h);

KForm wedge(const KForm& a, const KForm& b);
KForm ext_d(const KForm& a);          // degree <= 2
KForm contract(const HDerivation& d, const KForm& a);  // degree >= 1
/// Cartan formula i_d(d a) + d(i_d a); the i_d(d a) term is dropped at
/// top degree where the exterior derivative vanishes identically.
KForm lie_derivative(const HDerivation& d, const KForm& a);

/// Decides f - g in S.dP by solving for the factor with the weighted
/// Euler derivation: contracting h0.dP with (px,qy,rz) gives -t h0.
bool oneform_equiv_mod_dP(const KForm& f, const KForm& g);

/// The factor g with omega = g.omega_S in the quotient exterior square:
/// g = -t^{-1}(A P_x + B P_y + C P_z) mod P.
Polynomial twoform_to_volume_ratio(const KForm& omega);

/// Quotient equality in each degree: componentwise mod P in degree 0,
/// mod-dP in degree 1, equal volume ratios in degree 2; degree 3 forms
/// are all equivalent (the cube of a rank-2 module vanishes).
bool kform_equiv(const KForm& a, const KForm& b);

/// div with respect to omega_S: L_d(omega_S) = div(d) omega_S.
Polynomial hyp_divergence(const HyperPtr& h, const HDerivation& d);

/// Nambu-Poisson data for a factor Q: the bracket values
/// {x,y} = Q P_z, {y,z} = Q P_x, {z,x} = Q P_y (reduced) and the
/// Hamiltonian derivations {x,-} = Q delta_x, etc.
struct NambuData {
    std::array<Polynomial, 3> pi;  // {x,y}, {y,z}, {z,x}
    std::array<HDerivation, 3> hamiltonian;
};

NambuData nambu_bracket(const HyperPtr& h, const Polynomial& Q);

/// (div{x,-}, div{y,-}, div{z,-}) by the closed formula: the components
/// of grad(Q) x grad(P), reduced mod P.
std::array<Polynomial, 3> div_hamiltonian_closed_form(const HyperPtr& h,
                                                      const Polynomial& Q);

}  // namespace rinehart

#endif
