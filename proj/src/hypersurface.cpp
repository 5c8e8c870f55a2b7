#include "rinehart/hypersurface.hpp"

namespace rinehart {

HyperPtr make_quotient(const RingPtr& ambient, const Polynomial& P,
                       const std::array<long, 3>& weights) {
    if (ambient->nvars() != 3)
        throw DomainError("hypersurface ring needs exactly 3 variables");
    require_same_ring(ambient, P.ring());
    const CoefficientField& field = ambient->field;
    if (!P.constant_term().is_one())
        throw DomainError("P must have constant term 1");
    Polynomial T = P - Polynomial::constant(ambient, 1);
    if (T.is_zero())
        throw DomainError("P = 1 defines no hypersurface (T is zero)");

    // integer weighted degree of each monomial of T, for diagnostics;
    // uniformity and the unit test are decided in the field
    bool have_t = false;
    long t_int = 0;
    Scalar t = Scalar::zero(field);
    std::array<Scalar, 3> wf = {Scalar::from_int(field, weights[0]),
                                Scalar::from_int(field, weights[1]),
                                Scalar::from_int(field, weights[2])};
    for (const auto& [m, c] : T.terms()) {
        long deg_int = weights[0] * static_cast<long>(m[0]) +
                       weights[1] * static_cast<long>(m[1]) +
                       weights[2] * static_cast<long>(m[2]);
        Scalar deg = Scalar::from_int(field, deg_int);
        if (!have_t) {
            have_t = true;
            t_int = deg_int;
            t = deg;
        } else if (deg != t) {
            throw DomainError("T is not weighted-homogeneous: degrees " +
                              std::to_string(t_int) + " and " +
                              std::to_string(deg_int) + " differ");
        }
    }
    if (t.is_zero())
        throw DomainError("t = " + std::to_string(t_int) +
                          " is not a unit in " + field.str());

    HypersurfaceRing h{ambient,
                       P,
                       weights,
                       wf,
                       t,
                       {P.derivative(0), P.derivative(1), P.derivative(2)}};
    auto ptr = std::make_shared<const HypersurfaceRing>(std::move(h));

    // Euler identity px P_x + qy P_y + rz P_z = -t mod P
    Polynomial euler(ambient);
    for (std::size_t v = 0; v < 3; ++v)
        euler += Polynomial::variable(ambient, v).scaled(wf[v]) * ptr->dP[v];
    if (!qequal(ptr, euler, Polynomial::constant(ambient, -t)))
        throw DomainError(
            "internal inconsistency: the weighted Euler identity fails");
    return ptr;
}

Polynomial qreduce(const HyperPtr& h, const Polynomial& f) {
    return divrem(f, h->P).second;
}

bool qequal(const HyperPtr& h, const Polynomial& f, const Polynomial& g) {
    return qreduce(h, f - g).is_zero();
}

static std::size_t comp_count(int degree) {
    switch (degree) {
        case 0:
        case 3:
            return 1;
        case 1:
        case 2:
            return 3;
        default:
            throw DomainError("form degree must be 0..3");
    }
}

KForm kform(const HyperPtr& h, int degree, std::vector<Polynomial> comps) {
    if (comps.size() != comp_count(degree))
        throw DomainError("wrong component count for form degree");
    for (auto& c : comps) {
        require_same_ring(c.ring(), h->ambient);
        c = qreduce(h, c);
    }
    return KForm{h, degree, std::move(comps)};
}

KForm kform_zero(const HyperPtr& h, int degree) {
    return KForm{h, degree,
                 std::vector<Polynomial>(comp_count(degree),
                                         Polynomial(h->ambient))};
}

KForm kform_dvar(const HyperPtr& h, std::size_t var) {
    if (var >= 3) throw DomainError("variable index out of range");
    KForm f = kform_zero(h, 1);
    f.comps[var] = Polynomial::constant(h->ambient, 1);
    return f;
}

KForm volume_form(const HyperPtr& h) {
    std::vector<Polynomial> comps;
    for (std::size_t v = 0; v < 3; ++v)
        comps.push_back(
            Polynomial::variable(h->ambient, v).scaled(h->weights_f[v]));
    return kform(h, 2, std::move(comps));
}

KForm dP_form(const HyperPtr& h) {
    return kform(h, 1, {h->dP[0], h->dP[1], h->dP[2]});
}

HDerivation make_derivation(const HyperPtr& h,
                            const std::array<Polynomial, 3>& images) {
    Polynomial dp(h->ambient);
    for (std::size_t v = 0; v < 3; ++v) {
        require_same_ring(images[v].ring(), h->ambient);
        dp += images[v] * h->dP[v];
    }
    if (!qreduce(h, dp).is_zero())
        throw DomainError(
            "derivation does not preserve the ideal: d(P) != 0 mod P");
    return HDerivation{h, images};
}

std::array<HDerivation, 3> coordinate_derivations(const HyperPtr& h) {
    Polynomial z(h->ambient);
    const Polynomial &Px = h->dP[0], &Py = h->dP[1], &Pz = h->dP[2];
    return {make_derivation(h, {z, Pz, -Py}),
            make_derivation(h, {-Pz, z, Px}),
            make_derivation(h, {Py, -Px, z})};
}

static void require_same_quotient(const HyperPtr& a, const HyperPtr& b) {
    if (a != b && !(a && b && same_ring(a->ambient, b->ambient) &&
                    a->P == b->P && a->weights == b->weights))
        throw MismatchError("forms over different hypersurface rings");
}

KForm wedge(const KForm& a, const KForm& b) {
    require_same_quotient(a.h, b.h);
    int deg = a.degree + b.degree;
    if (deg > 3) throw DomainError("wedge degree overflow");
    const HyperPtr& h = a.h;
    if (a.degree == 0) {
        KForm r = b;
        for (auto& c : r.comps) c = qreduce(h, a.comps[0] * c);
        return r;
    }
    if (b.degree == 0) return wedge(b, a);
    if (a.degree == 1 && b.degree == 1) {
        return kform(h, 2,
                     {a.comps[1] * b.comps[2] - a.comps[2] * b.comps[1],
                      a.comps[2] * b.comps[0] - a.comps[0] * b.comps[2],
                      a.comps[0] * b.comps[1] - a.comps[1] * b.comps[0]});
    }
    // 1-form against 2-form in either order (they commute)
    const KForm& one = a.degree == 1 ? a : b;
    const KForm& two = a.degree == 1 ? b : a;
    Polynomial vol = one.comps[0] * two.comps[0] +
                     one.comps[1] * two.comps[1] +
                     one.comps[2] * two.comps[2];
    return kform(h, 3, {vol});
}

KForm ext_d(const KForm& a) {
    const HyperPtr& h = a.h;
    switch (a.degree) {
        case 0: {
            const Polynomial& f = a.comps[0];
            return kform(h, 1,
                         {f.derivative(0), f.derivative(1), f.derivative(2)});
        }
        case 1: {
            const Polynomial &f = a.comps[0], &g = a.comps[1],
                             &k = a.comps[2];
            return kform(h, 2,
                         {k.derivative(1) - g.derivative(2),
                          f.derivative(2) - k.derivative(0),
                          g.derivative(0) - f.derivative(1)});
        }
        case 2:
            return kform(h, 3,
                         {a.comps[0].derivative(0) + a.comps[1].derivative(1) +
                          a.comps[2].derivative(2)});
        default:
            throw DomainError("exterior derivative degree overflow");
    }
}

KForm contract(const HDerivation& d, const KForm& a) {
    require_same_quotient(d.h, a.h);
    const HyperPtr& h = a.h;
    const Polynomial &u = d.on[0], &v = d.on[1], &w = d.on[2];
    switch (a.degree) {
        case 1:
            return kform(h, 0,
                         {a.comps[0] * u + a.comps[1] * v + a.comps[2] * w});
        case 2: {
            const Polynomial &A = a.comps[0], &B = a.comps[1],
                             &C = a.comps[2];
            return kform(h, 1,
                         {B * w - C * v, C * u - A * w, A * v - B * u});
        }
        case 3: {
            const Polynomial& f = a.comps[0];
            return kform(h, 2, {f * u, f * v, f * w});
        }
        default:
            throw DomainError("contraction degree underflow");
    }
}

KForm lie_derivative(const HDerivation& d, const KForm& a) {
    if (a.degree == 0) {
        // L_d(f) = d(f), the derivation applied to the function
        Polynomial r(a.h->ambient);
        for (std::size_t v = 0; v < 3; ++v)
            r += d.on[v] * a.comps[0].derivative(v);
        return kform(a.h, 0, {r});
    }
    KForm part = ext_d(contract(d, a));
    if (a.degree < 3) {
        KForm other = contract(d, ext_d(a));
        for (std::size_t i = 0; i < part.comps.size(); ++i)
            part.comps[i] = qreduce(a.h, part.comps[i] + other.comps[i]);
    }
    return part;
}

bool oneform_equiv_mod_dP(const KForm& f, const KForm& g) {
    require_same_quotient(f.h, g.h);
    if (f.degree != 1 || g.degree != 1)
        throw DomainError("mod-dP equivalence is for 1-forms");
    const HyperPtr& h = f.h;
    std::array<Polynomial, 3> u = {qreduce(h, f.comps[0] - g.comps[0]),
                                   qreduce(h, f.comps[1] - g.comps[1]),
                                   qreduce(h, f.comps[2] - g.comps[2])};
    Polynomial contracted(h->ambient);
    for (std::size_t v = 0; v < 3; ++v)
        contracted +=
            Polynomial::variable(h->ambient, v).scaled(h->weights_f[v]) * u[v];
    Polynomial h0 = qreduce(h, contracted.scaled(-(h->t.inverse())));
    for (std::size_t v = 0; v < 3; ++v)
        if (!qequal(h, u[v], h0 * h->dP[v])) return false;
    return true;
}

Polynomial twoform_to_volume_ratio(const KForm& omega) {
    if (omega.degree != 2)
        throw DomainError("volume ratio is for 2-forms");
    const HyperPtr& h = omega.h;
    Polynomial s = omega.comps[0] * h->dP[0] + omega.comps[1] * h->dP[1] +
                   omega.comps[2] * h->dP[2];
    return qreduce(h, s.scaled(-(h->t.inverse())));
}

bool kform_equiv(const KForm& a, const KForm& b) {
    require_same_quotient(a.h, b.h);
    if (a.degree != b.degree)
        throw DomainError("forms of different degrees");
    switch (a.degree) {
        case 0:
            return qequal(a.h, a.comps[0], b.comps[0]);
        case 1:
            return oneform_equiv_mod_dP(a, b);
        case 2:
            return twoform_to_volume_ratio(a) == twoform_to_volume_ratio(b);
        default:
            return true;  // the third exterior power of Omega vanishes
    }
}

Polynomial hyp_divergence(const HyperPtr& h, const HDerivation& d) {
    require_same_quotient(h, d.h);
    return twoform_to_volume_ratio(lie_derivative(d, volume_form(h)));
}

NambuData nambu_bracket(const HyperPtr& h, const Polynomial& Q) {
    require_same_ring(h->ambient, Q.ring());
    auto deltas = coordinate_derivations(h);
    std::array<HDerivation, 3> ham = {
        make_derivation(h, {Q * deltas[0].on[0], Q * deltas[0].on[1],
                            Q * deltas[0].on[2]}),
        make_derivation(h, {Q * deltas[1].on[0], Q * deltas[1].on[1],
                            Q * deltas[1].on[2]}),
        make_derivation(h, {Q * deltas[2].on[0], Q * deltas[2].on[1],
                            Q * deltas[2].on[2]})};
    return NambuData{{qreduce(h, Q * h->dP[2]), qreduce(h, Q * h->dP[0]),
                      qreduce(h, Q * h->dP[1])},
                     std::move(ham)};
}

std::array<Polynomial, 3> div_hamiltonian_closed_form(const HyperPtr& h,
                                                      const Polynomial& Q) {
    require_same_ring(h->ambient, Q.ring());
    std::array<Polynomial, 3> gq = {Q.derivative(0), Q.derivative(1),
                                    Q.derivative(2)};
    const std::array<Polynomial, 3>& gp = h->dP;
    return {qreduce(h, gq[1] * gp[2] - gq[2] * gp[1]),
            qreduce(h, gq[2] * gp[0] - gq[0] * gp[2]),
            qreduce(h, gq[0] * gp[1] - gq[1] * gp[0])};
}

}  // namespace rinehart
