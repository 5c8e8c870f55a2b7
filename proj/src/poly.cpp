#include "rinehart/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rinehart {

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw MismatchError("monomials of different lengths");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw MismatchError("monomials of different lengths");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (a.size() != b.size())
        throw MismatchError("monomials of different lengths");
    switch (ord) {
        case MonomialOrder::Lex:
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        case MonomialOrder::GrevLex: {
            std::uint64_t da = a.total_degree(), db = b.total_degree();
            if (da != db) return da > db ? 1 : -1;
            // rightmost differing exponent: smaller one is larger
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

std::size_t PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return i;
    return npos;
}

std::string PolyRing::str() const {
    std::string s = field.str() + "[";
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (i) s += ",";
        s += variables[i];
    }
    return s + "]";
}

namespace {

bool valid_var_name(const std::string& v) {
    if (v.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    return std::all_of(v.begin() + 1, v.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

RingPtr make_ring(std::vector<std::string> variables, CoefficientField field,
                  MonomialOrder order) {
    if (variables.empty())
        throw DomainError("a polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!valid_var_name(v))
            throw DomainError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw DomainError("duplicate variable name '" + v + "'");
    }
    return std::make_shared<const PolyRing>(
        PolyRing{std::move(variables), field, order});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->variables == b->variables && a->field == b->field &&
           a->order == b->order;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b))
        throw MismatchError("polynomials from different rings");
}

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(MonoGreater{ring_->order}) {}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long n) {
    return constant(ring, Scalar::from_int(ring->field, n));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t var) {
    if (var >= ring->nvars()) throw DomainError("variable index out of range");
    return term(ring, Monomial::unit(ring->nvars(), var),
                Scalar::one(ring->field));
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m,
                            const Scalar& c) {
    if (m.size() != ring->nvars())
        throw MismatchError("monomial length does not match ring");
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Scalar Polynomial::constant_term() const {
    return coeff(Monomial(ring_->nvars()));
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const std::pair<const Monomial, Scalar>& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    return terms_ == o.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw DomainError("unknown variable");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Scalar::from_int(ring_->field,
                                           static_cast<long>(m[var])));
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->variables[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string cs = c.str();
        std::string piece;
        if (mono.empty()) {
            piece = cs;
        } else if (c.is_one()) {
            piece = mono;
        } else if ((-c).is_one()) {
            piece = "-" + mono;
        } else {
            piece = cs + "*" + mono;
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f,
                                         const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    Polynomial q(f.ring()), r(f.ring()), h = f;
    const auto& [gm, gc] = g.leading_term();
    while (!h.is_zero()) {
        const auto& [hm, hc] = h.leading_term();
        if (gm.divides(hm)) {
            Polynomial t = Polynomial::term(f.ring(), hm.quotient(gm), hc / gc);
            q += t;
            h -= t * g;
        } else {
            r.add_term(hm, hc);
            h.terms_.erase(h.terms_.begin());
        }
    }
    return {q, r};
}

}  // namespace rinehart
