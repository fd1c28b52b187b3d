#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace configres {

/// Exact field element: a rational number (always canonical) or a residue in F_p.
///
/// Rationals embed into F_p on mixed arithmetic, so integer literals such as
/// `Scalar(1)` act as constants in either field. Mixing two different primes
/// raises FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class value);

    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar fp(std::int64_t value, std::uint64_t p);
    /// Parses "3", "-2/5"; integers only ("7") when `p` is nonzero.
    static Scalar parse(std::string_view text, std::uint64_t p = 0);

    bool is_fp() const noexcept { return p_ != 0; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const;
    bool is_one() const;
    int sign() const;  // rationals only; F_p elements report 0 or 1

    const mpq_class& rational_value() const;
    std::uint64_t residue() const { return r_; }

    Scalar inverse() const;
    /// The same value, viewed in the field of `like` (no-op unless `like` is F_p).
    Scalar in_field_of(const Scalar& like) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    static std::uint64_t reduce(const mpz_class& value, std::uint64_t p);
    void unify(Scalar& other);

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;  // 0 means rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t p);

}  // namespace configres
