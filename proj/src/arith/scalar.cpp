#include "configres/arith/scalar.hpp"

#include <ostream>

#include "configres/errors.hpp"

namespace configres {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::fp(std::int64_t value, std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    Scalar s;
    s.p_ = p;
    s.r_ = reduce(mpz_class(static_cast<long>(value)), p);
    return s;
}

Scalar Scalar::parse(std::string_view text, std::uint64_t p) {
    std::string str(text);
    auto first = str.find_first_not_of(" \t");
    auto last = str.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty scalar");
    str = str.substr(first, last - first + 1);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    mpq_class q;
    try {
        if (q.set_str(str, 10) != 0) throw Error(ErrorCode::ParseError, "bad scalar '" + str + "'");
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "bad scalar '" + str + "'");
    }
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + str + "'");
    q.canonicalize();
    Scalar s(q);
    if (p != 0) {
        Scalar unit = fp(1, p);
        return s.in_field_of(unit);
    }
    return s;
}

std::uint64_t Scalar::reduce(const mpz_class& value, std::uint64_t p) {
    mpz_class m = value % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return p_ ? r_ == 1 % p_ : q_ == 1; }

int Scalar::sign() const { return p_ ? (r_ != 0) : sgn(q_); }

const mpq_class& Scalar::rational_value() const {
    if (p_) throw Error(ErrorCode::FieldMismatch, "F_p element has no rational value");
    return q_;
}

Scalar Scalar::in_field_of(const Scalar& like) const {
    if (!like.p_ || p_ == like.p_) return *this;
    if (p_) throw Error(ErrorCode::FieldMismatch, "cannot mix F_" + std::to_string(p_) + " and F_" + std::to_string(like.p_));
    std::uint64_t p = like.p_;
    std::uint64_t den = reduce(q_.get_den(), p);
    if (den == 0) throw Error(ErrorCode::NotInvertibleModP, q_.get_str() + " mod " + std::to_string(p));
    Scalar s;
    s.p_ = p;
    s.r_ = mul_mod(reduce(q_.get_num(), p), pow_mod(den, p - 2, p), p);
    return s;
}

void Scalar::unify(Scalar& other) {
    if (p_ == other.p_) return;
    if (!p_) *this = in_field_of(other);
    else other = other.in_field_of(*this);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    Scalar b = rhs;
    unify(b);
    if (p_) {
        r_ = (r_ + b.r_) % p_;
    } else {
        q_ += b.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    Scalar b = rhs;
    unify(b);
    if (p_) {
        r_ = (r_ + p_ - b.r_) % p_;
    } else {
        q_ -= b.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    Scalar b = rhs;
    unify(b);
    if (p_) {
        r_ = mul_mod(r_, b.r_, p_);
    } else {
        q_ *= b.q_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) s.r_ = (p_ - r_) % p_;
    else s.q_ = -s.q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar s = *this;
    if (p_) s.r_ = pow_mod(r_, p_ - 2, p_);
    else s.q_ = 1 / q_;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
    Scalar x = a;
    Scalar y = b;
    x.unify(y);
    return x.r_ == y.r_;
}

std::string Scalar::to_string() const { return p_ ? std::to_string(r_) : q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace configres
