#include "rinehart/parse.hpp"

#include <cctype>

namespace rinehart {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            std::size_t at = pos_;
            mpz_class n = nat();
            if (!n.fits_uint_p())
                throw ParseError("exponent too large", at);
            return b.pow(n.get_ui());
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')', "')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = nat();
            if (peek('/')) {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                mpz_class den = nat();
                if (den == 0)
                    throw ParseError("division by zero constant", at);
                return Polynomial::constant(
                    ring_, Scalar::from_ratio(ring_->field, num, den));
            }
            return Polynomial::constant(ring_,
                                        Scalar::from_mpz(ring_->field, num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name = ident();
            std::size_t idx = ring_->var_index(name);
            if (idx == PolyRing::npos)
                throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ring_, idx);
        }
        throw ParseError("expected operand", pos_);
    }

    mpz_class nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected number", pos_);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string ident() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
    return PolyParser(text, ring).run();
}

}  // namespace rinehart
