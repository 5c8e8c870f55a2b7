#ifndef RINEHART_NAKAYAMA_HPP
#define RINEHART_NAKAYAMA_HPP

#include <string>
#include <vector>

#include "rinehart/envelope.hpp"
#include "rinehart/hypersurface.hpp"
#include "rinehart/poisson.hpp"

namespace rinehart {

/// The Nakayama automorphism data: nu fixes the ring and sends each
/// generator a_i to a_i + shifts[i]. The divergence is always taken
/// against the standard volume form dx_1 ^ ... ^ dx_n of the base ring
/// (hypersurface case: against omega_S), which pins the outputs.
struct NakayamaResult {
    std::vector<std::string> generators;
    std::vector<Polynomial> shifts;
    bool verified = false;
    std::string verify_detail;  // filled when verification failed
    bool calabi_yau = false;
    std::string reason;
};

/// shifts[i] = Tr(ad_{a_i}) + div(anchor derivation of a_i); verified by
/// the endomorphism relation checks and the shift-inverse round trip.
/// Throws on an algebra failing validate_lie_rinehart.
NakayamaResult nakayama_free(const LiePtr& lr);

/// shifts[i] = 2 div({x_i,-}); throws (with the witness in the message)
/// when the Jacobi identity fails. Agrees with nakayama_free on the
/// associated Lie-Rinehart algebra.
NakayamaResult nakayama_poisson(const PoissonStructure& ps);

/// Generator images over dx,dy,dz for the Nambu bracket of Q on the
/// hypersurface: shifts = 2 grad(Q) x grad(P) mod P, cross-checked
/// against the closed divergence formula and the Cartan-formula
/// divergence, plus the dP-relation consistency sum. No U arithmetic is
/// attempted (L is not free here).
NakayamaResult nakayama_hypersurface(const HyperPtr& h, const Polynomial& Q);

/// True iff every shift is the zero polynomial. Requires verified input.
bool is_calabi_yau(const NakayamaResult& r);

/// The Nakayama generator images a_i + shifts[i] as elements of U.
GeneratorImages nakayama_images(const LiePtr& lr,
                                const std::vector<Polynomial>& shifts);

}  // namespace rinehart

#endif
