/// Exact scalar arithmetic. Every quantity in this library is a bignum
/// rational; there are no tolerances and no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qracah {

/// Raised when a q-series denominator or coefficient denominator vanishes
/// for the supplied parameters.
struct DegenerateQ : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when an identity check is invoked on a parameter record that
/// violates the admissibility constraints it needs.
struct ConstraintViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by the parameter sampler after exhausting its redraw budget.
struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Arbitrary-precision rational, always kept in canonical form
/// (reduced, positive denominator). Equality is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw DegenerateQ("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& s) {
        mpq_class v(s);
        if (v.get_den() == 0) throw DegenerateQ("Rational: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DegenerateQ("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DegenerateQ("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// Canonical exact string: "p" or "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// b^e for any integer e (b != 0 when e < 0).
inline Rational pow_int(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    const bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.raw().get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), b.raw().get_den().get_mpz_t(), ue);
    Rational r(mpq_class(num) / mpq_class(den));
    return neg ? r.inverse() : r;
}

/// Exponent counted in halves: a power c^{n - N/2} is stored as
/// twice = 2n - N and applied to the stored square root of c, so no root
/// extraction ever happens at runtime.
struct HalfInt {
    long twice = 0;

    static HalfInt whole(long n) { return HalfInt{2 * n}; }
    static HalfInt half(long n) { return HalfInt{n}; }

    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    bool operator==(const HalfInt&) const = default;
};

/// c^e where sqrt_c is the stored square root of c and e may be
/// half-integral: c^e = sqrt_c^{2e}.
inline Rational pow_half(const Rational& sqrt_c, HalfInt e) {
    return pow_int(sqrt_c, e.twice);
}

}  // namespace qracah
