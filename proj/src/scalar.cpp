#include "rinehart/scalar.hpp"

namespace rinehart {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// residue of an mpz modulo p, mapped to 0..p-1
std::uint64_t mpz_mod_u64(const mpz_class& n, std::uint64_t p) {
    mpz_class m = n % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for all 64-bit n
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

CoefficientField CoefficientField::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw DomainError("characteristic " + std::to_string(p) +
                          " is not prime");
    return CoefficientField(p);
}

std::string CoefficientField::str() const {
    return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::from_int(const CoefficientField& f, long n) {
    return from_mpz(f, mpz_class(n));
}

Scalar Scalar::from_mpz(const CoefficientField& f, const mpz_class& n) {
    if (f.is_rationals()) return Scalar(0, mpq_class(n), 0);
    return Scalar(f.characteristic(), mpq_class(0),
                  mpz_mod_u64(n, f.characteristic()));
}

Scalar Scalar::from_ratio(const CoefficientField& f, const mpz_class& num,
                          const mpz_class& den) {
    if (den == 0) throw DomainError("division by zero constant");
    mpq_class q(num, den);
    q.canonicalize();
    if (f.is_rationals()) return Scalar(0, std::move(q), 0);
    std::uint64_t p = f.characteristic();
    if (mpz_mod_u64(q.get_den(), p) == 0)
        throw DomainError("rational literal " + q.get_str() +
                          " has denominator divisible by " + std::to_string(p));
    std::uint64_t n = mpz_mod_u64(q.get_num(), p);
    std::uint64_t d = mpz_mod_u64(q.get_den(), p);
    return Scalar(p, mpq_class(0), mulmod_u64(n, powmod_u64(d, p - 2, p), p));
}

CoefficientField Scalar::field() const {
    return p_ == 0 ? CoefficientField::rationals()
                   : CoefficientField::prime_field(p_);
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_)
        throw MismatchError("scalars from different coefficient fields");
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }
bool Scalar::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (p_ == 0) return Scalar(0, q_ + o.q_, 0);
    std::uint64_t s = r_ + o.r_;
    if (s >= p_) s -= p_;
    return Scalar(p_, mpq_class(0), s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(0, -q_, 0);
    return Scalar(p_, mpq_class(0), r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (p_ == 0) return Scalar(0, q_ * o.q_, 0);
    return Scalar(p_, mpq_class(0), mulmod_u64(r_, o.r_, p_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (p_ == 0) return Scalar(0, 1 / q_, 0);
    return Scalar(p_, mpq_class(0), powmod_u64(r_, p_ - 2, p_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace rinehart
