#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pbf/errors.hpp"

namespace pbf {

using BigInt = mpz_class;

/// Exact rational number. Always stored reduced with a positive denominator;
/// zero is canonically 0/1. All arithmetic and comparisons are exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long v) : value_(BigInt(static_cast<long>(v))) {
        static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    }
    explicit Rational(BigInt v) : value_(std::move(v)) {}

    Rational(BigInt numerator, BigInt denominator) {
        if (denominator == 0)
            throw Error(Errc::bad_args, "rational with zero denominator");
        value_ = mpq_class(std::move(numerator), std::move(denominator));
        value_.canonicalize();
    }

    /// Parses "p" or "p/q" with optional leading '-', base 10.
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    /// "p" when the denominator is 1, otherwise "p/q". Lossless.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(Errc::bad_args, "division by zero rational");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c <=> 0;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

Rational abs(const Rational& v);

/// v^exponent by exact powering of numerator and denominator.
Rational pow(const Rational& v, unsigned exponent);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned exponent);

} // namespace pbf
