#ifndef RINEHART_POLY_HPP
#define RINEHART_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rinehart/scalar.hpp"

namespace rinehart {

/// Exponent vector, one natural number per ring variable. Also reused by
/// the enveloping algebra as the exponent vector of a PBW word.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    static Monomial unit(std::size_t nvars, std::size_t var) {
        Monomial m(nvars);
        m.e_[var] = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    std::uint64_t total_degree() const;
    bool is_constant() const { return total_degree() == 0; }
    bool divides(const Monomial& o) const;

    Monomial operator*(const Monomial& o) const;
    /// componentwise difference; caller guarantees divisibility
    Monomial quotient(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
};

enum class MonomialOrder { GrevLex, Lex };

/// -1, 0, +1 with a < b, a == b, a > b in the given order.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

/// "greater" comparator so that std::map iterates leading-term first.
struct MonoGreater {
    MonomialOrder ord = MonomialOrder::GrevLex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, ord) > 0;
    }
};

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// S = k[x_1,...,x_n] with a fixed monomial order. Immutable; shared.
struct PolyRing {
    std::vector<std::string> variables;
    CoefficientField field;
    MonomialOrder order;

    std::size_t nvars() const { return variables.size(); }
    /// index of a variable name, or npos
    std::size_t var_index(std::string_view name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::string str() const;
};

/// Validates variable names ([a-zA-Z][a-zA-Z0-9_]*, distinct, at least one).
RingPtr make_ring(std::vector<std::string> variables, CoefficientField field,
                  MonomialOrder order = MonomialOrder::GrevLex);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse exact polynomial in canonical form: no zero coefficient is
/// ever stored, terms are kept in decreasing monomial order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, MonoGreater>;

    explicit Polynomial(RingPtr ring);
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long n);
    static Polynomial variable(const RingPtr& ring, std::size_t var);
    static Polynomial term(const RingPtr& ring, const Monomial& m,
                           const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    /// coefficient of the constant monomial (zero scalar if absent)
    Scalar constant_term() const;
    Scalar coeff(const Monomial& m) const;
    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    /// leading term under the ring's order; throws DomainError on zero
    const std::pair<const Monomial, Scalar>& leading_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(unsigned k) const;
    Polynomial scaled(const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// formal partial derivative; exponents are cast into the field,
    /// so d(x^2)/dx = 0 over F_2
    Polynomial derivative(std::size_t var) const;

    /// terms in decreasing monomial order, explicit '*', '^' powers;
    /// re-parses to the same value under the expression grammar
    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);  // accumulate, prune 0

    RingPtr ring_;
    TermMap terms_;

    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& f,
                                                    const Polynomial& g);
};

/// Division with remainder by a single polynomial: f = q*g + r where no
/// monomial of r is divisible by the leading monomial of g. r is the
/// normal form of f modulo the principal ideal (g).
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f,
                                         const Polynomial& g);

}  // namespace rinehart

#endif
