#ifndef RINEHART_ENVELOPE_HPP
#define RINEHART_ENVELOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rinehart/lierinehart.hpp"

namespace rinehart {

/// Element of the enveloping algebra U(S, L) in PBW normal form: a
/// finite sum of terms s_e * a_1^{e_1} ... a_d^{e_d} with left
/// S-coefficients and ordered generator words. The exponent vector is
/// stored as a Monomial of length d; no zero coefficient is kept.
class UElement {
public:
    using TermMap = std::map<Monomial, Polynomial, MonoGreater>;

    static UElement zero(LiePtr lr);
    static UElement one(const LiePtr& lr);
    static UElement from_poly(const LiePtr& lr, const Polynomial& s);
    static UElement generator(const LiePtr& lr, std::size_t i);
    static UElement from_lelement(const LiePtr& lr, const LElement& a);

    const LiePtr& algebra() const { return lr_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// maximal total degree in the generators (0 for S-elements and 0)
    std::uint64_t l_degree() const;
    Polynomial coeff(const Monomial& e) const;

    UElement operator+(const UElement& o) const;
    UElement operator-(const UElement& o) const;
    UElement operator-() const;
    UElement& operator+=(const UElement& o) { return *this = *this + o; }
    UElement& operator-=(const UElement& o) { return *this = *this - o; }
    bool operator==(const UElement& o) const;
    bool operator!=(const UElement& o) const { return !(*this == o); }

    /// left multiplication by a ring element (coefficientwise)
    UElement scaled(const Polynomial& s) const;

    std::string str() const;

    void add_term(const Monomial& e, const Polynomial& c);

private:
    explicit UElement(LiePtr lr);
    LiePtr lr_;
    TermMap terms_;
};

/// Product in U, normalized with the rewriting rules
///   a_i * s   -> s * a_i + a_i(s)
///   a_j * a_i -> a_i * a_j + [a_j, a_i]    (j > i)
UElement u_mul(const UElement& a, const UElement& b);
UElement u_pow(const UElement& a, unsigned k);
UElement u_commutator(const UElement& a, const UElement& b);

/// Images of the generators under a prospective S-fixing endomorphism.
struct GeneratorImages {
    LiePtr lr;
    std::vector<UElement> images;
};

GeneratorImages identity_images(const LiePtr& lr);

/// The free multiplicative extension: s * a^e maps to
/// s * nu(a_1)^{e_1} ... nu(a_d)^{e_d}, renormalized. Meaningful only
/// when endo_check_relations passes.
UElement endo_apply(const GeneratorImages& nu, const UElement& a);

struct RelCheckResult {
    bool ok = true;
    std::string detail;  // witness description when !ok
};

/// Verifies [nu(a_i), x_m] = a_i(x_m) for every generator and variable,
/// and [nu(a_i), nu(a_j)] = nu([a_i, a_j]) for every i < j. Passing
/// certifies that nu extends to an S-fixing algebra endomorphism of U.
RelCheckResult endo_check_relations(const GeneratorImages& nu);

/// For images of the shift shape a_i + c_i with c_i in S, returns the
/// inverse images a_i - c_i after checking both compositions restore the
/// generators; nullopt when some image is not a shift.
std::optional<GeneratorImages> shift_auto_inverse(const GeneratorImages& nu);

/// Parses the U-expression grammar used by the command line:
///   uexpr := uterm (('+'|'-') uterm)* ; uterm := ufactor ('*' ufactor)* ;
///   ufactor := '-' ufactor | atom ; atom := generator | '{' poly '}'
///            | '(' uexpr ')' | '[' uexpr ',' uexpr ']'
UElement parse_uexpr(std::string_view text, const LiePtr& lr);

}  // namespace rinehart

#endif
