#include "rinehart/nakayama.hpp"

namespace rinehart {

namespace {

void fill_calabi_yau(NakayamaResult& r, const CoefficientField& field) {
    if (!r.verified) {
        r.calabi_yau = false;
        r.reason = "verification failed: " + r.verify_detail;
        return;
    }
    for (std::size_t i = 0; i < r.shifts.size(); ++i) {
        if (!r.shifts[i].is_zero()) {
            r.calabi_yau = false;
            r.reason = "nonzero shift for " + r.generators[i] + ": " +
                       r.shifts[i].str();
            return;
        }
    }
    r.calabi_yau = true;
    r.reason = field.characteristic() == 2
                   ? "all shifts vanish (doubling collapses in "
                     "characteristic 2)"
                   : "all trace and divergence shifts vanish";
}

}  // namespace

GeneratorImages nakayama_images(const LiePtr& lr,
                                const std::vector<Polynomial>& shifts) {
    GeneratorImages nu{lr, {}};
    for (std::size_t i = 0; i < lr->rank(); ++i)
        nu.images.push_back(UElement::generator(lr, i) +
                            UElement::from_poly(lr, shifts[i]));
    return nu;
}

NakayamaResult nakayama_free(const LiePtr& lr) {
    ValidationResult v = validate_lie_rinehart(lr);
    if (!v.ok)
        throw DomainError("not a Lie-Rinehart algebra: " + v.reason);
    NakayamaResult r;
    r.generators = lr->names;
    for (std::size_t i = 0; i < lr->rank(); ++i)
        r.shifts.push_back(trace_ad_basis(lr, i) + div_std(lr->anchor[i]));

    GeneratorImages nu = nakayama_images(lr, r.shifts);
    RelCheckResult rel = endo_check_relations(nu);
    bool invertible = shift_auto_inverse(nu).has_value();
    r.verified = rel.ok && invertible;
    if (!rel.ok)
        r.verify_detail = rel.detail;
    else if (!invertible)
        r.verify_detail = "shift inverse round trip failed";
    fill_calabi_yau(r, lr->ring->field);
    return r;
}

NakayamaResult nakayama_poisson(const PoissonStructure& ps) {
    JacobiResult j = check_jacobi(ps);
    if (!j.ok) {
        const auto& vars = ps.ring()->variables;
        throw DomainError("bracket is not Poisson: jacobiator(" +
                          vars[j.witness[0]] + "," + vars[j.witness[1]] +
                          "," + vars[j.witness[2]] + ") = " + j.defect.str());
    }
    LiePtr lr = to_lie_rinehart(ps);
    NakayamaResult r;
    r.generators = lr->names;
    Scalar two = Scalar::from_int(ps.ring()->field, 2);
    for (std::size_t i = 0; i < ps.nvars(); ++i)
        r.shifts.push_back(
            div_std(hamiltonian_components(ps, i)).scaled(two));

    // same shifts as the free-basis route, by Tr(ad_{dx_i}) = div({x_i,-})
    NakayamaResult via_free = nakayama_free(lr);
    if (via_free.shifts != r.shifts) {
        r.verified = false;
        r.verify_detail = "Poisson-form shifts disagree with the "
                          "trace + divergence route";
    } else {
        r.verified = via_free.verified;
        r.verify_detail = via_free.verify_detail;
    }
    fill_calabi_yau(r, ps.ring()->field);
    return r;
}

NakayamaResult nakayama_hypersurface(const HyperPtr& h, const Polynomial& Q) {
    require_same_ring(h->ambient, Q.ring());
    NakayamaResult r;
    for (const auto& v : h->ambient->variables) r.generators.push_back("d" + v);

    Scalar two = Scalar::from_int(h->ambient->field, 2);
    Vec3 gq = grad(Q);
    Vec3 gp = make_vec3(h->dP[0], h->dP[1], h->dP[2]);
    Vec3 cr = cross(gq, gp);
    for (std::size_t v = 0; v < 3; ++v)
        r.shifts.push_back(qreduce(h, cr.c[v].scaled(two)));

    // route 2: the closed divergence formula
    std::array<Polynomial, 3> closed = div_hamiltonian_closed_form(h, Q);
    // route 3: Cartan-formula divergence of the Hamiltonian derivations
    NambuData nd = nambu_bracket(h, Q);
    bool agree = true;
    std::string detail;
    for (std::size_t v = 0; v < 3; ++v) {
        Polynomial via_closed = qreduce(h, closed[v].scaled(two));
        Polynomial via_cartan =
            qreduce(h, hyp_divergence(h, nd.hamiltonian[v]).scaled(two));
        if (r.shifts[v] != via_closed || r.shifts[v] != via_cartan) {
            agree = false;
            detail = "divergence routes disagree on d" +
                     h->ambient->variables[v] + ": " + r.shifts[v].str() +
                     " / " + via_closed.str() + " / " + via_cartan.str();
            break;
        }
    }
    // nu must kill the Kaehler relation dP = 0: sum P_v c_v = 0 mod P
    Polynomial rel(h->ambient);
    for (std::size_t v = 0; v < 3; ++v) rel += h->dP[v] * r.shifts[v];
    if (!qreduce(h, rel).is_zero()) {
        agree = false;
        detail = "shifts do not annihilate the dP relation: " +
                 qreduce(h, rel).str();
    }
    r.verified = agree;
    r.verify_detail = detail;
    fill_calabi_yau(r, h->ambient->field);
    return r;
}

bool is_calabi_yau(const NakayamaResult& r) {
    if (!r.verified)
        throw DomainError("Calabi-Yau verdict requires a verified result");
    for (const auto& s : r.shifts)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace rinehart
