#include "rinehart/poisson.hpp"

namespace rinehart {

PoissonStructure PoissonStructure::from_upper(
    const RingPtr& ring, const std::vector<std::vector<Polynomial>>& upper) {
    const std::size_t n = ring->nvars();
    Polynomial z(ring);
    std::vector<std::vector<Polynomial>> pi(n,
                                            std::vector<Polynomial>(n, z));
    if (upper.size() != n) throw DomainError("upper entries must have n rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (upper[i].size() != n)
            throw DomainError("upper entries must be n x n");
        for (std::size_t j = i + 1; j < n; ++j) {
            require_same_ring(upper[i][j].ring(), ring);
            pi[i][j] = upper[i][j];
            pi[j][i] = -upper[i][j];
        }
    }
    return PoissonStructure(ring, std::move(pi));
}

PoissonStructure PoissonStructure::from_matrix(
    const RingPtr& ring, std::vector<std::vector<Polynomial>> pi) {
    const std::size_t n = ring->nvars();
    if (pi.size() != n) throw DomainError("matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
        if (pi[i].size() != n) throw DomainError("matrix must be n x n");
        for (std::size_t j = 0; j < n; ++j) {
            require_same_ring(pi[i][j].ring(), ring);
            // pi_ii = 0 is checked outright; in characteristic 2 it is not
            // a consequence of antisymmetry
            bool bad = i == j ? !pi[i][i].is_zero() : pi[i][j] != -pi[j][i];
            if (bad)
                throw DomainError("Poisson matrix is not antisymmetric at (" +
                                  std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
        }
    }
    return PoissonStructure(ring, std::move(pi));
}

Polynomial poisson_bracket(const PoissonStructure& ps, const Polynomial& f,
                           const Polynomial& g) {
    require_same_ring(ps.ring(), f.ring());
    require_same_ring(ps.ring(), g.ring());
    const std::size_t n = ps.nvars();
    Polynomial r(ps.ring());
    std::vector<Polynomial> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dg[j].is_zero() || ps.pi(i, j).is_zero()) continue;
            r += ps.pi(i, j) * df[i] * dg[j];
        }
    }
    return r;
}

Polynomial jacobiator(const PoissonStructure& ps, const Polynomial& f,
                      const Polynomial& g, const Polynomial& h) {
    return poisson_bracket(ps, f, poisson_bracket(ps, g, h)) +
           poisson_bracket(ps, g, poisson_bracket(ps, h, f)) +
           poisson_bracket(ps, h, poisson_bracket(ps, f, g));
}

JacobiResult check_jacobi(const PoissonStructure& ps) {
    const std::size_t n = ps.nvars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Polynomial d = jacobiator(ps, Polynomial::variable(ps.ring(), i),
                                          Polynomial::variable(ps.ring(), j),
                                          Polynomial::variable(ps.ring(), k));
                if (!d.is_zero()) {
                    JacobiResult r(std::move(d));
                    r.ok = false;
                    r.witness = {i, j, k};
                    return r;
                }
            }
    JacobiResult r{Polynomial(ps.ring())};
    r.ok = true;
    return r;
}

static void require_three_vars(const RingPtr& ring) {
    if (ring->nvars() != 3)
        throw DomainError("operation requires a 3-variable ring");
}

Vec3 make_vec3(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    require_same_ring(a.ring(), b.ring());
    require_same_ring(a.ring(), c.ring());
    require_three_vars(a.ring());
    return Vec3{a.ring(), {a, b, c}};
}

Vec3 vec3_zero(const RingPtr& ring) {
    require_three_vars(ring);
    Polynomial z(ring);
    return Vec3{ring, {z, z, z}};
}

bool vec3_equal(const Vec3& u, const Vec3& v) {
    return u.c[0] == v.c[0] && u.c[1] == v.c[1] && u.c[2] == v.c[2];
}

Polynomial dot(const Vec3& u, const Vec3& v) {
    require_same_ring(u.ring, v.ring);
    return u.c[0] * v.c[0] + u.c[1] * v.c[1] + u.c[2] * v.c[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
    require_same_ring(u.ring, v.ring);
    return Vec3{u.ring,
                {u.c[1] * v.c[2] - u.c[2] * v.c[1],
                 u.c[2] * v.c[0] - u.c[0] * v.c[2],
                 u.c[0] * v.c[1] - u.c[1] * v.c[0]}};
}

Vec3 grad(const Polynomial& f) {
    require_three_vars(f.ring());
    return Vec3{f.ring(), {f.derivative(0), f.derivative(1), f.derivative(2)}};
}

Vec3 curl(const Vec3& v) {
    return Vec3{v.ring,
                {v.c[2].derivative(1) - v.c[1].derivative(2),
                 v.c[0].derivative(2) - v.c[2].derivative(0),
                 v.c[1].derivative(0) - v.c[0].derivative(1)}};
}

Polynomial div_std(const std::vector<Polynomial>& components) {
    if (components.empty()) throw DomainError("empty derivation");
    const RingPtr& ring = components[0].ring();
    if (components.size() != ring->nvars())
        throw DomainError("derivation needs one component per variable");
    Polynomial r(ring);
    for (std::size_t m = 0; m < components.size(); ++m) {
        require_same_ring(components[m].ring(), ring);
        r += components[m].derivative(m);
    }
    return r;
}

PoissonStructure poisson3d_from_vector(const Vec3& pvec) {
    require_three_vars(pvec.ring);
    Polynomial z(pvec.ring);
    std::vector<std::vector<Polynomial>> upper(3,
                                               std::vector<Polynomial>(3, z));
    upper[0][1] = pvec.c[2];  // {x,y} = P_z
    upper[1][2] = pvec.c[0];  // {y,z} = P_x
    upper[0][2] = -pvec.c[1]; // {z,x} = P_y
    return PoissonStructure::from_upper(pvec.ring, upper);
}

std::vector<Polynomial> hamiltonian_components(const PoissonStructure& ps,
                                               std::size_t i) {
    if (i >= ps.nvars()) throw DomainError("variable index out of range");
    std::vector<Polynomial> comps;
    comps.reserve(ps.nvars());
    for (std::size_t j = 0; j < ps.nvars(); ++j) comps.push_back(ps.pi(i, j));
    return comps;
}

std::optional<Polynomial> recover_potential(const Vec3& v) {
    if (!v.ring->field.is_rationals())
        throw DomainError(
            "potential recovery needs characteristic zero coefficients");
    Vec3 cv = curl(v);
    if (!cv.c[0].is_zero() || !cv.c[1].is_zero() || !cv.c[2].is_zero())
        return std::nullopt;
    // radial homotopy: every monomial m of v . (x,y,z) contributes m/deg(m)
    Polynomial radial(v.ring);
    for (std::size_t i = 0; i < 3; ++i)
        radial += Polynomial::variable(v.ring, i) * v.c[i];
    Polynomial q(v.ring);
    for (const auto& [m, c] : radial.terms()) {
        long deg = static_cast<long>(m.total_degree());
        q += Polynomial::term(
            v.ring, m,
            c / Scalar::from_int(v.ring->field, deg));
    }
    return q;
}

LiePtr to_lie_rinehart(const PoissonStructure& ps) {
    const RingPtr& ring = ps.ring();
    const std::size_t n = ring->nvars();
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& v : ring->variables) names.push_back("d" + v);
    std::vector<std::vector<Polynomial>> anchor;
    anchor.reserve(n);
    for (std::size_t i = 0; i < n; ++i) anchor.push_back(hamiltonian_components(ps, i));
    Polynomial z(ring);
    std::vector<std::vector<std::vector<Polynomial>>> structure(
        n, std::vector<std::vector<Polynomial>>(n,
                                                std::vector<Polynomial>(n, z)));
    // [dx_i, dx_k] = d{x_i,x_k} = sum_j dpi_ik/dx_j dx_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                structure[i][j][k] = ps.pi(i, k).derivative(j);
    return make_free_lie_rinehart(ring, std::move(names), std::move(anchor),
                                  std::move(structure));
}

}  // namespace rinehart
