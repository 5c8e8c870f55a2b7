#include "rinehart/envelope.hpp"

#include <cctype>

#include "rinehart/parse.hpp"

namespace rinehart {

UElement::UElement(LiePtr lr)
    : lr_(std::move(lr)), terms_(MonoGreater{MonomialOrder::GrevLex}) {}

UElement UElement::zero(LiePtr lr) { return UElement(std::move(lr)); }

UElement UElement::one(const LiePtr& lr) {
    return from_poly(lr, Polynomial::constant(lr->ring, 1));
}

UElement UElement::from_poly(const LiePtr& lr, const Polynomial& s) {
    require_same_ring(lr->ring, s.ring());
    UElement u(lr);
    u.add_term(Monomial(lr->rank()), s);
    return u;
}

UElement UElement::generator(const LiePtr& lr, std::size_t i) {
    if (i >= lr->rank()) throw DomainError("generator index out of range");
    UElement u(lr);
    u.add_term(Monomial::unit(lr->rank(), i),
               Polynomial::constant(lr->ring, 1));
    return u;
}

UElement UElement::from_lelement(const LiePtr& lr, const LElement& a) {
    if (a.coeffs.size() != lr->rank())
        throw MismatchError("L-element rank mismatch");
    UElement u(lr);
    for (std::size_t i = 0; i < lr->rank(); ++i)
        u.add_term(Monomial::unit(lr->rank(), i), a.coeffs[i]);
    return u;
}

std::uint64_t UElement::l_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
    return d;
}

Polynomial UElement::coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Polynomial(lr_->ring) : it->second;
}

void UElement::add_term(const Monomial& e, const Polynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void require_same_algebra(const LiePtr& a, const LiePtr& b) {
    if (a != b && !(a && b && same_ring(a->ring, b->ring) &&
                    a->names == b->names && a->anchor == b->anchor &&
                    a->structure == b->structure))
        throw MismatchError("U-elements over different algebras");
}

UElement UElement::operator+(const UElement& o) const {
    require_same_algebra(lr_, o.lr_);
    UElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

UElement UElement::operator-() const {
    UElement r(lr_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

UElement UElement::operator-(const UElement& o) const { return *this + (-o); }

bool UElement::operator==(const UElement& o) const {
    require_same_algebra(lr_, o.lr_);
    return terms_ == o.terms_;
}

UElement UElement::scaled(const Polynomial& s) const {
    UElement r(lr_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, s * c);
    return r;
}

std::string UElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string word;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!word.empty()) word += "*";
            word += lr_->names[i];
            if (e[i] > 1) word += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        std::string piece;
        if (word.empty()) {
            bool wrap =
                terms_.size() > 1 && (c.term_count() > 1 || cs[0] == '-');
            piece = wrap ? "(" + cs + ")" : cs;
        } else if (c.term_count() == 1 && !cs.empty() && cs[0] != '-') {
            piece = cs == "1" ? word : cs + "*" + word;
        } else {
            piece = "(" + cs + ")*" + word;
        }
        out += out.empty() ? piece : " + " + piece;
    }
    return out;
}

namespace {

std::size_t max_index(const Monomial& e) {
    for (std::size_t i = e.size(); i-- > 0;)
        if (e[i] > 0) return i;
    return static_cast<std::size_t>(-1);  // constant word
}

UElement mul_gen_right(const UElement& u, std::size_t i);

// a^e * t for t in S: pushes t left through the word with
// a_m t = t a_m + a_m(t). Every key of the result divides e, so the
// append step in the caller stays in normal order.
UElement word_times_poly(const LiePtr& lr, const Monomial& e,
                         const Polynomial& t) {
    if (t.is_zero()) return UElement::zero(lr);
    std::size_t m = max_index(e);
    if (m == static_cast<std::size_t>(-1)) return UElement::from_poly(lr, t);
    Monomial rest = e;
    rest[m] -= 1;
    UElement left = word_times_poly(lr, rest, t);
    UElement out = UElement::zero(lr);
    for (const auto& [g, c] : left.terms()) {
        Monomial ge = g;
        ge[m] += 1;
        out.add_term(ge, c);
    }
    out += word_times_poly(lr, rest, anchor_apply_basis(lr, m, t));
    return out;
}

// a^g * a_i in normal form
UElement word_times_gen(const LiePtr& lr, const Monomial& g, std::size_t i) {
    std::size_t m = max_index(g);
    if (m == static_cast<std::size_t>(-1) || m <= i) {
        Monomial e = g;
        e[i] += 1;
        UElement u = UElement::zero(lr);
        u.add_term(e, Polynomial::constant(lr->ring, 1));
        return u;
    }
    Monomial rest = g;
    rest[m] -= 1;
    // a^g a_i = (a^rest a_i) a_m + a^rest [a_m, a_i]
    UElement out = mul_gen_right(word_times_gen(lr, rest, i), m);
    for (std::size_t k = 0; k < lr->rank(); ++k) {
        const Polynomial& c = lr->structure[m][k][i];
        if (c.is_zero()) continue;
        out += mul_gen_right(word_times_poly(lr, rest, c), k);
    }
    return out;
}

UElement mul_gen_right(const UElement& u, std::size_t i) {
    UElement out = UElement::zero(u.algebra());
    for (const auto& [g, c] : u.terms())
        out += word_times_gen(u.algebra(), g, i).scaled(c);
    return out;
}

}  // namespace

UElement u_mul(const UElement& a, const UElement& b) {
    require_same_algebra(a.algebra(), b.algebra());
    const LiePtr& lr = a.algebra();
    UElement out = UElement::zero(lr);
    for (const auto& [e, s] : a.terms()) {
        for (const auto& [f, t] : b.terms()) {
            UElement w = word_times_poly(lr, e, t);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::uint32_t rep = 0; rep < f[i]; ++rep)
                    w = mul_gen_right(w, i);
            out += w.scaled(s);
        }
    }
    return out;
}

UElement u_pow(const UElement& a, unsigned k) {
    UElement r = UElement::one(a.algebra());
    for (unsigned i = 0; i < k; ++i) r = u_mul(r, a);
    return r;
}

UElement u_commutator(const UElement& a, const UElement& b) {
    return u_mul(a, b) - u_mul(b, a);
}

GeneratorImages identity_images(const LiePtr& lr) {
    GeneratorImages nu{lr, {}};
    for (std::size_t i = 0; i < lr->rank(); ++i)
        nu.images.push_back(UElement::generator(lr, i));
    return nu;
}

UElement endo_apply(const GeneratorImages& nu, const UElement& a) {
    const LiePtr& lr = nu.lr;
    require_same_algebra(lr, a.algebra());
    if (nu.images.size() != lr->rank())
        throw MismatchError("image count does not match rank");
    UElement out = UElement::zero(lr);
    for (const auto& [e, s] : a.terms()) {
        UElement w = UElement::one(lr);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t rep = 0; rep < e[i]; ++rep)
                w = u_mul(w, nu.images[i]);
        out += w.scaled(s);
    }
    return out;
}

RelCheckResult endo_check_relations(const GeneratorImages& nu) {
    const LiePtr& lr = nu.lr;
    const std::size_t d = lr->rank();
    const std::size_t n = lr->ring->nvars();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t m = 0; m < n; ++m) {
            UElement xm =
                UElement::from_poly(lr, Polynomial::variable(lr->ring, m));
            UElement lhs = u_commutator(nu.images[i], xm);
            UElement rhs = UElement::from_poly(lr, lr->anchor[i][m]);
            if (lhs != rhs)
                return {false,
                        "[nu(" + lr->names[i] + "), " +
                            lr->ring->variables[m] + "] = " + lhs.str() +
                            ", expected " + rhs.str()};
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            UElement lhs = u_commutator(nu.images[i], nu.images[j]);
            UElement rhs = endo_apply(
                nu, UElement::from_lelement(lr, bracket_basis(lr, i, j)));
            if (lhs != rhs)
                return {false,
                        "[nu(" + lr->names[i] + "), nu(" + lr->names[j] +
                            ")] = " + lhs.str() + ", expected nu([" +
                            lr->names[i] + "," + lr->names[j] +
                            "]) = " + rhs.str()};
        }
    return {true, ""};
}

std::optional<GeneratorImages> shift_auto_inverse(const GeneratorImages& nu) {
    const LiePtr& lr = nu.lr;
    const std::size_t d = lr->rank();
    GeneratorImages inv{lr, {}};
    for (std::size_t i = 0; i < d; ++i) {
        const UElement& img = nu.images[i];
        Monomial unit = Monomial::unit(d, i);
        Polynomial c(lr->ring);
        bool shape_ok = true;
        for (const auto& [e, coeff] : img.terms()) {
            if (e == unit) {
                if (!(coeff == Polynomial::constant(lr->ring, 1)))
                    shape_ok = false;
            } else if (e.is_constant()) {
                c = coeff;
            } else {
                shape_ok = false;
            }
        }
        if (!shape_ok || img.coeff(unit).is_zero()) return std::nullopt;
        inv.images.push_back(UElement::generator(lr, i) -
                             UElement::from_poly(lr, c));
    }
    for (std::size_t i = 0; i < d; ++i) {
        UElement gen = UElement::generator(lr, i);
        if (endo_apply(inv, nu.images[i]) != gen) return std::nullopt;
        if (endo_apply(nu, inv.images[i]) != gen) return std::nullopt;
    }
    return inv;
}

namespace {

class UExprParser {
public:
    UExprParser(std::string_view text, LiePtr lr)
        : text_(text), lr_(std::move(lr)) {}

    UElement run() {
        UElement u = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return u;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    UElement expr() {
        UElement u = term();
        for (;;) {
            if (accept('+'))
                u += term();
            else if (accept('-'))
                u -= term();
            else
                return u;
        }
    }

    UElement term() {
        UElement u = factor();
        while (accept('*')) u = u_mul(u, factor());
        return u;
    }

    UElement factor() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return -factor();
        }
        return atom();
    }

    UElement atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        char c = text_[pos_];
        if (c == '{') {
            std::size_t close = text_.find('}', pos_);
            if (close == std::string_view::npos)
                throw ParseError("unterminated '{'", pos_);
            std::string_view inner = text_.substr(pos_ + 1, close - pos_ - 1);
            Polynomial p(lr_->ring);
            try {
                p = parse_poly(inner, lr_->ring);
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), pos_ + 1 + e.offset);
            }
            pos_ = close + 1;
            return UElement::from_poly(lr_, p);
        }
        if (c == '(') {
            ++pos_;
            UElement u = expr();
            expect(')', "')'");
            return u;
        }
        if (c == '[') {
            ++pos_;
            UElement a = expr();
            expect(',', "','");
            UElement b = expr();
            expect(']', "']'");
            return u_commutator(a, b);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                    text_[end] == '_'))
                ++end;
            std::string name(text_.substr(pos_, end - pos_));
            for (std::size_t i = 0; i < lr_->rank(); ++i) {
                if (lr_->names[i] == name) {
                    pos_ = end;
                    return UElement::generator(lr_, i);
                }
            }
            throw ParseError("unknown generator '" + name +
                                 "' (ring elements go in braces)",
                             at);
        }
        throw ParseError("expected operand", pos_);
    }

    std::string_view text_;
    LiePtr lr_;
    std::size_t pos_ = 0;
};

}  // namespace

UElement parse_uexpr(std::string_view text, const LiePtr& lr) {
    return UExprParser(text, lr).run();
}

}  // namespace rinehart
