#ifndef RINEHART_SCALAR_HPP
#define RINEHART_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rinehart {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when operands belong to different rings/fields/algebras.
struct MismatchError : Error {
    using Error::Error;
};

/// Raised on invalid construction data (bad variable name, non-prime p, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Coefficient field: the rationals, or a prime field F_p.
class CoefficientField {
public:
    static CoefficientField rationals() { return CoefficientField(0); }
    static CoefficientField prime_field(std::uint64_t p);  // checks primality

    /// 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const CoefficientField& o) const { return p_ == o.p_; }
    bool operator!=(const CoefficientField& o) const { return p_ != o.p_; }

    std::string str() const;

private:
    explicit CoefficientField(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// Exact field element; carries its characteristic so mixed-field
/// arithmetic is rejected rather than silently coerced.
class Scalar {
public:
    Scalar() : p_(0), q_(0), r_(0) {}  // rational zero

    static Scalar zero(const CoefficientField& f) { return from_int(f, 0); }
    static Scalar one(const CoefficientField& f) { return from_int(f, 1); }
    static Scalar from_int(const CoefficientField& f, long n);
    static Scalar from_mpz(const CoefficientField& f, const mpz_class& n);
    /// num/den as an exact rational, reduced first; in F_p the reduced
    /// denominator must be coprime to p. Throws DomainError on den = 0.
    static Scalar from_ratio(const CoefficientField& f, const mpz_class& num,
                             const mpz_class& den);

    CoefficientField field() const;
    std::uint64_t characteristic() const { return p_; }

    bool is_zero() const;
    bool is_one() const;
    /// True for rationals < 0; always false in F_p (residues have no sign).
    bool is_negative() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    /// Exact division; throws DomainError on zero divisor.
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "-3", "1/2" over Q; the canonical residue "0".."p-1" in F_p.
    std::string str() const;

private:
    Scalar(std::uint64_t p, mpq_class q, std::uint64_t r)
        : p_(p), q_(std::move(q)), r_(r) {}
    void check_same(const Scalar& o) const;

    std::uint64_t p_;  // 0 = rationals
    mpq_class q_;      // payload when p_ == 0
    std::uint64_t r_;  // payload when p_ > 0, canonical residue
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace rinehart

#endif
