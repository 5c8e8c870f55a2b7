// Shared helpers for the test suites: seeded random generators for
// polynomials / structures / U-elements, and a naive word-rewriting
// normalizer that serves as the independent oracle for PBW products.
#ifndef RINEHART_TESTUTIL_HPP
#define RINEHART_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "rinehart/envelope.hpp"
#include "rinehart/hypersurface.hpp"
#include "rinehart/poisson.hpp"

namespace rinehart::testutil {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, int max_deg,
                              int max_terms, long coeff_bound = 4) {
    Polynomial p(ring);
    int terms = static_cast<int>(rand_int(rng, 0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(ring->nvars());
        int deg = static_cast<int>(rand_int(rng, 0, max_deg));
        for (int d = 0; d < deg; ++d) {
            std::size_t v =
                static_cast<std::size_t>(rand_int(rng, 0, ring->nvars() - 1));
            m[v] += 1;
        }
        long c = rand_int(rng, -coeff_bound, coeff_bound);
        p += Polynomial::term(ring, m, Scalar::from_int(ring->field, c));
    }
    return p;
}

inline Polynomial random_nonzero_poly(Rng& rng, const RingPtr& ring,
                                      int max_deg, int max_terms) {
    for (;;) {
        Polynomial p = random_poly(rng, ring, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

/// Jacobi always holds on two variables.
inline PoissonStructure random_poisson_2var(Rng& rng, const RingPtr& ring) {
    Polynomial z(ring);
    std::vector<std::vector<Polynomial>> upper(2,
                                               std::vector<Polynomial>(2, z));
    upper[0][1] = random_poly(rng, ring, 2, 3);
    return PoissonStructure::from_upper(ring, upper);
}

/// Jacobian bracket P = grad(Q): integrable by construction.
inline PoissonStructure random_poisson_jacobian(Rng& rng,
                                                const RingPtr& ring) {
    return poisson3d_from_vector(grad(random_poly(rng, ring, 3, 3)));
}

/// Nambu-shape bracket P = Q grad(F): P . curl P = 0 identically.
inline PoissonStructure random_poisson_nambu(Rng& rng, const RingPtr& ring) {
    Polynomial q = random_poly(rng, ring, 1, 2);
    Polynomial f = random_poly(rng, ring, 2, 2);
    Vec3 g = grad(f);
    return poisson3d_from_vector(
        make_vec3(q * g.c[0], q * g.c[1], q * g.c[2]));
}

/// A pool of valid Lie-Rinehart algebras for randomized suites.
inline std::vector<LiePtr> random_valid_algebras(Rng& rng,
                                                 const CoefficientField& field,
                                                 std::size_t count) {
    std::vector<LiePtr> out;
    RingPtr r2 = make_ring({"x", "y"}, field);
    RingPtr r3 = make_ring({"x", "y", "z"}, field);
    while (out.size() < count) {
        switch (out.size() % 3) {
            case 0:
                out.push_back(to_lie_rinehart(random_poisson_2var(rng, r2)));
                break;
            case 1:
                out.push_back(
                    to_lie_rinehart(random_poisson_jacobian(rng, r3)));
                break;
            default:
                out.push_back(to_lie_rinehart(random_poisson_nambu(rng, r3)));
                break;
        }
    }
    return out;
}

inline LElement random_lelement(Rng& rng, const LiePtr& lr, int max_deg = 2,
                                int max_terms = 2) {
    LElement a = lelement_zero(lr);
    for (std::size_t i = 0; i < lr->rank(); ++i)
        a.coeffs[i] = random_poly(rng, lr->ring, max_deg, max_terms);
    return a;
}

inline UElement random_uelement(Rng& rng, const LiePtr& lr, int max_ldeg = 2,
                                int max_terms = 3, int coeff_deg = 2) {
    UElement u = UElement::zero(lr);
    int terms = static_cast<int>(rand_int(rng, 1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial e(lr->rank());
        int deg = static_cast<int>(rand_int(rng, 0, max_ldeg));
        for (int d = 0; d < deg; ++d)
            e[static_cast<std::size_t>(
                rand_int(rng, 0, static_cast<long>(lr->rank()) - 1))] += 1;
        u.add_term(e, random_nonzero_poly(rng, lr->ring, coeff_deg, 2));
    }
    return u;
}

/// Random admissible hypersurface data: sparse T of uniform weighted
/// degree with t a unit, plus a low-degree Q.
inline std::pair<HyperPtr, Polynomial> random_hypersurface(
    Rng& rng, const RingPtr& ring) {
    for (;;) {
        std::array<long, 3> w = {rand_int(rng, 1, 3), rand_int(rng, 1, 3),
                                 rand_int(rng, 1, 3)};
        // pick a base monomial, then more monomials of the same weight
        Monomial m0(3);
        for (int d = 0, n = static_cast<int>(rand_int(rng, 1, 4)); d < n; ++d)
            m0[static_cast<std::size_t>(rand_int(rng, 0, 2))] += 1;
        long t = w[0] * m0[0] + w[1] * m0[1] + w[2] * m0[2];
        if (t == 0) continue;
        if (ring->field.characteristic() != 0 &&
            static_cast<unsigned long long>(t) %
                    ring->field.characteristic() ==
                0)
            continue;
        Polynomial T = Polynomial::term(
            ring, m0,
            Scalar::from_int(ring->field, rand_int(rng, 1, 3)));
        for (int extra = static_cast<int>(rand_int(rng, 0, 2)); extra > 0;
             --extra) {
            Monomial m(3);
            bool found = false;
            for (int tries = 0; tries < 30 && !found; ++tries) {
                Monomial cand(3);
                for (int d = 0, n = static_cast<int>(rand_int(rng, 1, 6));
                     d < n; ++d)
                    cand[static_cast<std::size_t>(rand_int(rng, 0, 2))] += 1;
                if (w[0] * cand[0] + w[1] * cand[1] + w[2] * cand[2] == t) {
                    m = cand;
                    found = true;
                }
            }
            if (found)
                T += Polynomial::term(
                    ring, m,
                    Scalar::from_int(ring->field, rand_int(rng, -3, 3)));
        }
        if (T.is_zero()) continue;
        if (!T.coeff(Monomial(3)).is_zero()) continue;  // no constant term
        Polynomial P = Polynomial::constant(ring, 1) + T;
        Polynomial Q = random_poly(rng, ring, 2, 2);
        try {
            return {make_quotient(ring, P, w), Q};
        } catch (const Error&) {
            continue;  // e.g. weights made some coefficient collapse
        }
    }
}

// ---------------------------------------------------------------------
// Word-rewriting oracle for U products. An expression is a sum of words;
// a word is a product of atoms (ring element or generator). Rewriting:
//   [gen i][poly s] -> [s][gen i] + [a_i(s)]
//   [gen j][gen i]  -> [gen i][gen j] + sum_k [s^j_{k,i}][gen k]  (j > i)
//   [poly][poly]    -> merged
// Strategy picks the leftmost or rightmost redex of a word first.
// ---------------------------------------------------------------------

using WordAtom = std::variant<Polynomial, std::size_t>;  // scalar or generator

using Word = std::vector<WordAtom>;

enum class Strategy { Leftmost, Rightmost };

inline bool atom_is_gen(const WordAtom& a) {
    return std::holds_alternative<std::size_t>(a);
}

inline std::vector<Word> rewrite_word_once(const LiePtr& lr, const Word& w,
                                           std::size_t at) {
    // returns the replacement words for the redex at position (at, at+1)
    std::vector<Word> out;
    const WordAtom &a = w[at], &b = w[at + 1];
    auto make = [&](std::vector<WordAtom> middle) {
        Word nw(w.begin(), w.begin() + static_cast<long>(at));
        for (auto& atom : middle) nw.push_back(std::move(atom));
        nw.insert(nw.end(), w.begin() + static_cast<long>(at) + 2, w.end());
        out.push_back(std::move(nw));
    };
    if (!atom_is_gen(a) && !atom_is_gen(b)) {
        make({WordAtom(std::get<Polynomial>(a) * std::get<Polynomial>(b))});
    } else if (atom_is_gen(a) && !atom_is_gen(b)) {
        std::size_t i = std::get<std::size_t>(a);
        const Polynomial& s = std::get<Polynomial>(b);
        make({WordAtom(s), WordAtom(i)});
        make({WordAtom(anchor_apply_basis(lr, i, s))});
    } else {
        std::size_t j = std::get<std::size_t>(a);  // j > i
        std::size_t i = std::get<std::size_t>(b);
        make({WordAtom(i), WordAtom(j)});
        for (std::size_t k = 0; k < lr->rank(); ++k) {
            const Polynomial& c = lr->structure[j][k][i];
            if (!c.is_zero()) make({WordAtom(c), WordAtom(k)});
        }
    }
    return out;
}

inline bool is_redex(const WordAtom& a, const WordAtom& b) {
    if (!atom_is_gen(a) && !atom_is_gen(b)) return true;
    if (atom_is_gen(a) && !atom_is_gen(b)) return true;
    if (atom_is_gen(a) && atom_is_gen(b))
        return std::get<std::size_t>(a) > std::get<std::size_t>(b);
    return false;
}

inline UElement normalize_words(const LiePtr& lr, std::vector<Word> work,
                                Strategy strat) {
    UElement out = UElement::zero(lr);
    while (!work.empty()) {
        Word w = std::move(work.back());
        work.pop_back();
        std::size_t redex = static_cast<std::size_t>(-1);
        if (w.size() >= 2) {
            if (strat == Strategy::Leftmost) {
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    if (is_redex(w[i], w[i + 1])) {
                        redex = i;
                        break;
                    }
            } else {
                for (std::size_t i = w.size() - 1; i-- > 0;)
                    if (is_redex(w[i], w[i + 1])) {
                        redex = i;
                        break;
                    }
            }
        }
        if (redex == static_cast<std::size_t>(-1)) {
            // normal word: optional leading polynomial, then sorted gens
            Polynomial c = Polynomial::constant(lr->ring, 1);
            Monomial e(lr->rank());
            for (const auto& atom : w) {
                if (atom_is_gen(atom))
                    e[std::get<std::size_t>(atom)] += 1;
                else
                    c *= std::get<Polynomial>(atom);
            }
            out.add_term(e, c);
            continue;
        }
        for (auto& nw : rewrite_word_once(lr, w, redex))
            work.push_back(std::move(nw));
    }
    return out;
}

inline std::vector<Word> words_of(const UElement& u) {
    std::vector<Word> out;
    for (const auto& [e, s] : u.terms()) {
        Word w;
        w.push_back(WordAtom(s));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t r = 0; r < e[i]; ++r) w.push_back(WordAtom(i));
        out.push_back(std::move(w));
    }
    return out;
}

/// Product of two normal forms by brute-force rewriting.
inline UElement oracle_mul(const UElement& a, const UElement& b,
                           Strategy strat) {
    std::vector<Word> work;
    for (const auto& wa : words_of(a))
        for (const auto& wb : words_of(b)) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            work.push_back(std::move(w));
        }
    return normalize_words(a.algebra(), std::move(work), strat);
}

/// Commutative product of the top L-degree symbols; the expected top
/// part of a PBW product.
inline UElement symbol_product_top(const UElement& a, const UElement& b) {
    const LiePtr& lr = a.algebra();
    std::uint64_t da = a.l_degree(), db = b.l_degree();
    UElement out = UElement::zero(lr);
    for (const auto& [e, s] : a.terms()) {
        if (e.total_degree() != da) continue;
        for (const auto& [f, t] : b.terms()) {
            if (f.total_degree() != db) continue;
            out.add_term(e * f, s * t);
        }
    }
    return out;
}

/// Top L-degree part of u.
inline UElement top_part(const UElement& u) {
    UElement out = UElement::zero(u.algebra());
    std::uint64_t d = u.l_degree();
    for (const auto& [e, s] : u.terms())
        if (e.total_degree() == d) out.add_term(e, s);
    return out;
}

}  // namespace rinehart::testutil

#endif
