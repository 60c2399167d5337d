#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lhom/errors.hpp"

namespace lhom {

/// The field of scalars: the rationals, or a prime field F_p with 2 <= p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }

    /// Throws InputError unless p is prime and in range.
    static FieldSpec prime_field(std::uint32_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    std::string to_string() const;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are arbitrary-precision reduced
/// fractions with positive denominator; prime-field elements are residues
/// in [0, p). No floating point anywhere.
class Scalar {
public:
    explicit Scalar(FieldSpec f) : field_(f) {}

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return of_int(f, 1); }
    static Scalar of_int(FieldSpec f, long v);

    /// Text form: rationals "a/b" or "a" (optional sign, reduction not
    /// required on input); prime-field elements as decimal integers,
    /// reduced mod p. Throws ParseError on malformed text.
    static Scalar parse(FieldSpec f, const std::string& text);

    FieldSpec field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws InputError on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: reduced "a/b" (denominator > 0, omitted when 1)
    /// over Q; the residue in [0, p) over F_p.
    std::string str() const;

private:
    FieldSpec field_;
    mpq_class rat_;           // payload over Q
    std::uint64_t res_ = 0;   // payload over F_p, in [0, p)

    void check_same_field(const Scalar& o) const;
};

}  // namespace lhom
