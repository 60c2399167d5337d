#include "lhom/field.hpp"

#include <cctype>

namespace lhom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
        throw InputError("prime_field: modulus " + std::to_string(p) + " is not a prime in [2, 2^31)");
    return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::of_int(FieldSpec f, long v) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.rat_ = v;
    } else {
        const long p = static_cast<long>(f.characteristic());
        long r = v % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

namespace {

bool valid_integer_token(const std::string& t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

// Strips a leading '+' (GMP does not accept one).
std::string strip_plus(const std::string& t) {
    return (!t.empty() && t[0] == '+') ? t.substr(1) : t;
}

}  // namespace

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    Scalar s(f);
    if (f.is_rationals()) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            if (!valid_integer_token(text))
                throw ParseError("scalar '" + text + "'", "expected integer or fraction");
            s.rat_ = mpq_class(strip_plus(text));
        } else {
            const std::string num = text.substr(0, slash);
            const std::string den = text.substr(slash + 1);
            if (!valid_integer_token(num) || !valid_integer_token(den))
                throw ParseError("scalar '" + text + "'", "expected integer or fraction");
            mpq_class q(strip_plus(num) + "/" + strip_plus(den));
            if (q.get_den() == 0)
                throw ParseError("scalar '" + text + "'", "zero denominator");
            q.canonicalize();
            s.rat_ = q;
        }
    } else {
        if (!valid_integer_token(text))
            throw ParseError("scalar '" + text + "'", "expected decimal residue");
        mpz_class z(strip_plus(text));
        mpz_class r;
        mpz_class p(static_cast<unsigned long>(f.characteristic()));
        mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        s.res_ = r.get_ui();
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw InputError("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        s.res_ = (res_ + o.res_) % p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        s.res_ = (res_ + p - o.res_) % p;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = rat_ * o.rat_;
    } else {
        // residues < 2^31, so the widened product fits in 64 bits
        s.res_ = (res_ * o.res_) % field_.characteristic();
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = field_.characteristic() - res_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = 1 / rat_;
    } else {
        // extended Euclid on (res, p)
        std::int64_t a = static_cast<std::int64_t>(res_);
        std::int64_t b = static_cast<std::int64_t>(field_.characteristic());
        std::int64_t x0 = 1, x1 = 0;
        while (b != 0) {
            const std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        const std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        x0 %= p;
        if (x0 < 0) x0 += p;
        s.res_ = static_cast<std::uint64_t>(x0);
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::str() const {
    return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace lhom
